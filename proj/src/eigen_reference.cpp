#include <cmath>

#include "dimspec/eigen.hpp"
#include "dimspec/errors.hpp"
#include "jacobi_common.hpp"

namespace dimspec {

EigenDecomposition eig_sym_reference(const SymMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v = opts.compute_vectors ? detail::identity(n) : std::vector<double>{};
  const double threshold = opts.tolerance * m.frobenius_norm();

  int sweep = 0;
  while (detail::off_diagonal_norm(a, n) > threshold) {
    if (sweep == opts.max_sweeps) {
      throw NumericalError("Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const auto [c, s] = detail::jacobi_rotation(a[p * n + p], a[q * n + q], apq);
        for (std::size_t j = 0; j < n; ++j) {
          const double x = a[p * n + j];
          const double y = a[q * n + j];
          a[p * n + j] = c * x - s * y;
          a[q * n + j] = s * x + c * y;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double x = a[i * n + p];
          const double y = a[i * n + q];
          a[i * n + p] = c * x - s * y;
          a[i * n + q] = s * x + c * y;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        if (opts.compute_vectors) {
          for (std::size_t i = 0; i < n; ++i) {
            const double x = v[i * n + p];
            const double y = v[i * n + q];
            v[i * n + p] = c * x - s * y;
            v[i * n + q] = s * x + c * y;
          }
        }
      }
    }
  }
  return detail::sorted_decomposition(a, v, n, sweep, opts.compute_vectors);
}

}  // namespace dimspec
