#pragma once

#include <stdexcept>
#include <string>

namespace dimspec {

/// Malformed or out-of-contract input (bad labels, self-loops, m = 0, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The eigensolver hit its sweep cap without converging.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Perron positivity needs an irreducible matrix; raised for A/Q on a disconnected graph.
class DisconnectedGraphError : public std::domain_error {
 public:
  explicit DisconnectedGraphError(const std::string& what) : std::domain_error(what) {}
};

/// An exhaustive routine was asked to work beyond its size guard.
class SizeGuardError : public std::length_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::length_error(what) {}
};

}  // namespace dimspec
