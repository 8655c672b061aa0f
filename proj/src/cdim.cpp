#include "dimspec/cdim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dimspec/errors.hpp"

namespace dimspec {

namespace {

void check_shape(int n, int m) {
  if (m < 1) throw InputError("matching size m must be at least 1");
  if (n <= 2 * m) throw InputError("K_{M,S} needs n > 2m (nonempty independent set)");
}

double checked_sqrt(double radicand) {
  if (radicand < 0.0) throw InputError("negative radicand in closed-form spectrum");
  return std::sqrt(radicand);
}

double adjacency_radical(int n, int m) { return checked_sqrt(1.0 + 8.0 * m * (n - 2.0 * m)); }

double signless_radical(int n, int m) { return checked_sqrt((2.0 + n) * (2.0 + n) - 16.0 * m); }

}  // namespace

double QuotientMatrix::off_diagonal() const { return delta * std::sqrt(static_cast<double>(r) * s); }

SymMatrix QuotientMatrix::as_matrix() const {
  SymMatrix b(2);
  b.set(0, 0, gamma1);
  b.set(1, 1, gamma2);
  b.set(0, 1, off_diagonal());
  return b;
}

QuotientMatrix quotient_matrix(MatrixKind kind, int m, int s) {
  if (m < 1) throw InputError("matching size m must be at least 1");
  if (s < 1) throw InputError("independent set size s must be at least 1");
  const int r = 2 * m;
  switch (kind) {
    case MatrixKind::Adjacency: return {kind, 1.0, 0.0, 1.0, r, s};
    case MatrixKind::Laplacian: return {kind, static_cast<double>(s), static_cast<double>(r), -1.0, r, s};
    case MatrixKind::SignlessLaplacian:
      return {kind, static_cast<double>(s) + 2.0, static_cast<double>(r), 1.0, r, s};
  }
  throw InputError("unknown matrix kind");
}

std::pair<double, double> quotient_eigenvalues(const QuotientMatrix& b) {
  const double diff = b.gamma1 - b.gamma2;
  const double root = std::sqrt(diff * diff + 4.0 * b.delta * b.delta * b.r * b.s);
  return {(b.gamma1 + b.gamma2 + root) / 2.0, (b.gamma1 + b.gamma2 - root) / 2.0};
}

double quotient_eigenvector_tail(const QuotientMatrix& b, double theta) {
  // gamma1 + delta*sqrt(rs)*x = theta
  return (theta - b.gamma1) / b.off_diagonal();
}

std::vector<double> lift_eigenvector(double /*theta*/, double x, int r, int s) {
  if (s < 1) throw InputError("lifting needs s >= 1");
  if (r < 1) throw InputError("lifting needs r >= 1");
  std::vector<double> w(static_cast<std::size_t>(r + s), 1.0);
  const double tail = std::sqrt(static_cast<double>(r) / s) * x;
  std::fill(w.begin() + r, w.end(), tail);
  return w;
}

Spectrum cdim_spectrum(MatrixKind kind, int n, int m) {
  check_shape(n, m);
  const int s = n - 2 * m;
  std::vector<SpectrumGroup> raw;
  switch (kind) {
    case MatrixKind::Adjacency: {
      const double root = adjacency_radical(n, m);
      raw = {{(1.0 + root) / 2.0, 1}, {1.0, m - 1}, {0.0, s - 1}, {-1.0, m}, {(1.0 - root) / 2.0, 1}};
      break;
    }
    case MatrixKind::Laplacian:
      raw = {{static_cast<double>(n), 1},
             {s + 2.0, m},
             {static_cast<double>(s), m - 1},
             {2.0 * m, s - 1},
             {0.0, 1}};
      break;
    case MatrixKind::SignlessLaplacian: {
      const double root = signless_radical(n, m);
      raw = {{(2.0 + n + root) / 2.0, 1},
             {s + 2.0, m - 1},
             {static_cast<double>(s), m},
             {2.0 * m, s - 1},
             {(2.0 + n - root) / 2.0, 1}};
      break;
    }
  }
  std::erase_if(raw, [](const SpectrumGroup& g) { return g.multiplicity == 0; });
  std::stable_sort(raw.begin(), raw.end(),
                   [](const SpectrumGroup& a, const SpectrumGroup& b) { return a.value > b.value; });

  // Integer-valued groups are exact doubles; radicals compare at 1e-12.
  std::vector<SpectrumGroup> merged;
  for (const auto& g : raw) {
    if (!merged.empty() &&
        std::abs(merged.back().value - g.value) <= 1e-12 * std::max(1.0, std::abs(g.value))) {
      merged.back().multiplicity += g.multiplicity;
    } else {
      merged.push_back(g);
    }
  }
  return Spectrum(std::move(merged));
}

PrincipalPair cdim_principal(MatrixKind kind, int n, int m) {
  check_shape(n, m);
  const int s = n - 2 * m;
  PrincipalPair out;
  double tail = 0.0;
  switch (kind) {
    case MatrixKind::Adjacency:
      out.radius = (1.0 + adjacency_radical(n, m)) / 2.0;
      tail = (out.radius - 1.0) / s;
      break;
    case MatrixKind::Laplacian:
      out.radius = n;
      tail = -2.0 * m / s;
      break;
    case MatrixKind::SignlessLaplacian:
      out.radius = (2.0 + n + signless_radical(n, m)) / 2.0;
      tail = (out.radius - (s + 2.0)) / s;
      break;
  }
  out.vector.assign(static_cast<std::size_t>(n), 1.0);
  std::fill(out.vector.begin() + 2 * m, out.vector.end(), tail);
  out.anchor = 1;
  return out;
}

RadiusUpperBounds cdim_radius_upper_bounds(int n, int m) {
  check_shape(n, m);
  return {(1.0 + adjacency_radical(n, m)) / 2.0, (2.0 + n + signless_radical(n, m)) / 2.0};
}

}  // namespace dimspec
