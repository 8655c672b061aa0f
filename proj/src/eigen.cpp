#include "dimspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "dimspec/errors.hpp"
#include "jacobi_common.hpp"

namespace dimspec {

std::vector<double> EigenDecomposition::column(std::size_t col) const {
  std::vector<double> out(order);
  for (std::size_t row = 0; row < order; ++row) out[row] = vectors[row * order + col];
  return out;
}

namespace {

struct Pair {
  std::size_t p, q;
  detail::Rotation rot;
  bool active;
};

// Pair k rotates its own two rows; rows of disjoint pairs are disjoint.
void rotate_rows(std::vector<double>& a, std::size_t n, const Pair& pr) {
  if (!pr.active) return;
  const auto [c, s] = pr.rot;
  double* rp = &a[pr.p * n];
  double* rq = &a[pr.q * n];
  for (std::size_t j = 0; j < n; ++j) {
    const double x = rp[j];
    const double y = rq[j];
    rp[j] = c * x - s * y;
    rq[j] = s * x + c * y;
  }
}

// Row i receives every column rotation of the round.
void rotate_columns(std::vector<double>& a, std::vector<double>& v, std::size_t n, std::size_t i,
                    const std::vector<Pair>& round) {
  double* ri = &a[i * n];
  double* vi = v.empty() ? nullptr : &v[i * n];
  for (const Pair& pr : round) {
    if (!pr.active) continue;
    const auto [c, s] = pr.rot;
    const double x = ri[pr.p];
    const double y = ri[pr.q];
    ri[pr.p] = c * x - s * y;
    ri[pr.q] = s * x + c * y;
    if (vi) {
      const double vx = vi[pr.p];
      const double vy = vi[pr.q];
      vi[pr.p] = c * vx - s * vy;
      vi[pr.q] = s * vx + c * vy;
    }
  }
}

// Work-sharing loops live only inside this function's own parallel region, so
// callers that are themselves parallel workers are unaffected.
void apply_round(std::vector<double>& a, std::vector<double>& v, std::size_t n, const std::vector<Pair>& round,
                 bool parallel) {
  if (!parallel) {
    for (const Pair& pr : round) rotate_rows(a, n, pr);
    for (std::size_t i = 0; i < n; ++i) rotate_columns(a, v, n, i, round);
    return;
  }
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::size_t k = 0; k < round.size(); ++k) rotate_rows(a, n, round[k]);
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < n; ++i) rotate_columns(a, v, n, i, round);
  }
}

}  // namespace

EigenDecomposition eig_sym(const SymMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v = opts.compute_vectors ? detail::identity(n) : std::vector<double>{};
  const double threshold = opts.tolerance * m.frobenius_norm();

  // Tournament schedule over an even number of players; index n is a bye.
  const std::size_t players = n + (n % 2);
  const std::size_t half = players / 2;
  std::vector<std::size_t> seating(players);
  std::iota(seating.begin(), seating.end(), 0);
  std::vector<Pair> round(half);
  const bool parallel = n >= kParallelJacobiMinOrder;

  int sweep = 0;
  while (detail::off_diagonal_norm(a, n) > threshold) {
    if (sweep == opts.max_sweeps) {
      throw NumericalError("Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
    }
    ++sweep;
    for (std::size_t r = 0; r + 1 < players; ++r) {
      for (std::size_t k = 0; k < half; ++k) {
        std::size_t p = seating[k];
        std::size_t q = seating[players - 1 - k];
        if (p > q) std::swap(p, q);
        Pair& pr = round[k];
        pr.p = p;
        pr.q = q;
        pr.active = q < n && a[p * n + q] != 0.0;
        if (pr.active) pr.rot = detail::jacobi_rotation(a[p * n + p], a[q * n + q], a[p * n + q]);
      }
      apply_round(a, v, n, round, parallel);
      for (const Pair& pr : round) {
        if (!pr.active) continue;
        a[pr.p * n + pr.q] = 0.0;
        a[pr.q * n + pr.p] = 0.0;
      }
      std::rotate(seating.begin() + 1, seating.end() - 1, seating.end());
    }
  }
  return detail::sorted_decomposition(a, v, n, sweep, opts.compute_vectors);
}

Spectrum::Spectrum(std::vector<SpectrumGroup> groups) : groups_(std::move(groups)) {
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i].multiplicity < 1) throw InputError("spectrum multiplicities must be positive");
    if (i > 0 && !(groups_[i].value < groups_[i - 1].value)) {
      throw InputError("spectrum group values must strictly decrease");
    }
  }
}

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& g : groups_) total += g.multiplicity;
  return total;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  for (const auto& g : groups_) out.insert(out.end(), static_cast<std::size_t>(g.multiplicity), g.value);
  return out;
}

std::string format_number(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string Spectrum::to_string(int decimals) const {
  std::string out;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_number(groups_[i].value, decimals);
    if (groups_[i].multiplicity > 1) out += "^[" + std::to_string(groups_[i].multiplicity) + "]";
  }
  return out;
}

Spectrum group_spectrum(std::span<const double> values, double tol) {
  std::vector<SpectrumGroup> groups;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && std::abs(values[j - 1] - values[j]) <= tol) sum += values[j++];
    groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return Spectrum(std::move(groups));
}

Spectrum spectrum_from_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return group_spectrum(values, tol);
}

PrincipalPair principal_pair(const SymMatrix& m, MatrixKind kind) {
  if (kind != MatrixKind::Laplacian && !is_irreducible(m)) {
    throw DisconnectedGraphError(std::string("principal eigenvector of the ") +
                                 std::string(to_string(kind)) +
                                 " matrix needs a connected graph");
  }
  const EigenDecomposition eig = eig_sym(m);
  PrincipalPair out;
  out.radius = eig.values.front();
  out.vector = eig.column(0);
  double biggest = 0.0;
  for (double x : out.vector) biggest = std::max(biggest, std::abs(x));
  std::size_t anchor = 0;
  while (std::abs(out.vector[anchor]) <= 1e-9 * biggest) ++anchor;
  const double scale = 1.0 / out.vector[anchor];
  for (double& x : out.vector) x *= scale;
  out.anchor = static_cast<int>(anchor) + 1;
  return out;
}

double max_residual(const SymMatrix& m, const EigenDecomposition& eig) {
  double worst = 0.0;
  for (std::size_t k = 0; k < eig.order; ++k) {
    const auto vk = eig.column(k);
    const auto mv = m.multiply(vk);
    for (std::size_t i = 0; i < eig.order; ++i) {
      worst = std::max(worst, std::abs(mv[i] - eig.values[k] * vk[i]));
    }
  }
  return worst;
}

double orthogonality_error(const EigenDecomposition& eig) {
  const std::size_t n = eig.order;
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += eig.vector_entry(i, a) * eig.vector_entry(i, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace dimspec
