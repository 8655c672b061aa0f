#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimspec/graph.hpp"

namespace dimspec {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

std::string_view to_string(MatrixKind kind);
/// Accepts "a", "l", "q" (and the full names, case-insensitive).
std::optional<MatrixKind> parse_matrix_kind(std::string_view text);

/// Dense real symmetric matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Zero matrix of the given order.
  explicit SymMatrix(std::size_t order);
  /// Throws InputError unless `entries` is order*order and symmetric.
  SymMatrix(std::size_t order, std::vector<double> entries);

  std::size_t order() const { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * order_, order_}; }
  std::span<const double> data() const { return data_; }

  double trace() const;
  double frobenius_norm() const;

  /// y = M x.
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// A(G), L(G) = D - A or Q(G) = D + A.
SymMatrix matrix(const Graph& g, MatrixKind kind);

/// True iff the off-diagonal nonzero pattern of m is a connected graph.
bool is_irreducible(const SymMatrix& m);

}  // namespace dimspec
