#pragma once

// Shared pieces of the two Jacobi implementations.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dimspec/eigen.hpp"

namespace dimspec::detail {

struct Rotation {
  double c = 1.0;
  double s = 0.0;
};

/// Rotation that annihilates a_pq under A' = J^T A J with
/// J_pp = J_qq = c, J_pq = s, J_qp = -s.
inline Rotation jacobi_rotation(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c};
}

inline double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(s);
}

/// Sorts eigenpairs non-increasing and packs the result.
inline EigenDecomposition sorted_decomposition(const std::vector<double>& a, const std::vector<double>& v,
                                               std::size_t n, int sweeps, bool with_vectors) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });
  EigenDecomposition out;
  out.order = n;
  out.sweeps = sweeps;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a[idx[k] * n + idx[k]];
  if (with_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t k = 0; k < n; ++k) out.vectors[row * n + k] = v[row * n + idx[k]];
    }
  }
  return out;
}

inline std::vector<double> identity(std::size_t n) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  return v;
}

}  // namespace dimspec::detail
