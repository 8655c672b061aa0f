#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dimspec/matrix.hpp"

namespace dimspec {

/// Eigenpairs of a symmetric matrix. values are non-increasing; column i of
/// `vectors` (row-major, order x order) pairs with values[i].
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<double> vectors;
  std::size_t order = 0;
  int sweeps = 0;

  double vector_entry(std::size_t row, std::size_t col) const { return vectors[row * order + col]; }
  std::vector<double> column(std::size_t col) const;
};

struct JacobiOptions {
  /// Converged once off(A) <= tolerance * ||M||_F.
  double tolerance = 1e-12;
  int max_sweeps = 100;
  bool compute_vectors = true;
};

/// Round-robin (tournament-ordered) Jacobi. Each round rotates n/2 disjoint
/// index pairs; rounds are OpenMP-parallel over pairs once the order is
/// large enough to pay for the fork. Throws NumericalError past the sweep cap.
EigenDecomposition eig_sym(const SymMatrix& m, const JacobiOptions& opts = {});

/// Serial cyclic-by-row Jacobi. Reference implementation used to check eig_sym.
EigenDecomposition eig_sym_reference(const SymMatrix& m, const JacobiOptions& opts = {});

/// Order above which eig_sym forks OpenMP threads.
inline constexpr std::size_t kParallelJacobiMinOrder = 64;

inline constexpr double kDefaultGroupingTolerance = 1e-6;

struct SpectrumGroup {
  double value = 0.0;
  int multiplicity = 0;
};

/// Distinct eigenvalues with multiplicities, strictly decreasing.
class Spectrum {
 public:
  Spectrum() = default;
  /// Throws InputError unless values strictly decrease and multiplicities are positive.
  explicit Spectrum(std::vector<SpectrumGroup> groups);

  const std::vector<SpectrumGroup>& groups() const { return groups_; }
  std::size_t distinct() const { return groups_.size(); }
  int total_multiplicity() const;
  /// Expanded, non-increasing.
  std::vector<double> values() const;
  double largest() const { return groups_.front().value; }

  /// "9, 6^[2], 5^[3]" with `decimals` places and trailing zeros trimmed.
  std::string to_string(int decimals = 4) const;

 private:
  std::vector<SpectrumGroup> groups_;
};

/// Merges adjacent values within `tol`; each group's value is the mean.
/// `values` must be non-increasing.
Spectrum group_spectrum(std::span<const double> values, double tol = kDefaultGroupingTolerance);

/// Sorts arbitrary values into non-increasing order and groups them.
Spectrum spectrum_from_values(std::vector<double> values, double tol = kDefaultGroupingTolerance);

/// Spectral radius and principal eigenvector scaled so that entry `anchor`
/// (1-based) equals +1. anchor is 1 unless that entry vanishes.
struct PrincipalPair {
  double radius = 0.0;
  std::vector<double> vector;
  int anchor = 1;
};

/// For Adjacency/SignlessLaplacian kinds the matrix must be irreducible
/// (connected graph); otherwise DisconnectedGraphError.
PrincipalPair principal_pair(const SymMatrix& m, MatrixKind kind);

/// max_i |(M v_i - lambda_i v_i)|_inf over all eigenpairs.
double max_residual(const SymMatrix& m, const EigenDecomposition& eig);
/// max_{i,j} |<v_i, v_j> - delta_ij|.
double orthogonality_error(const EigenDecomposition& eig);

std::string format_number(double x, int decimals = 4);

}  // namespace dimspec
