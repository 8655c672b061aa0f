#include "dimspec/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "dimspec/matrix.hpp"

namespace dimspec {

namespace {

int guarded_ceil(double x) { return static_cast<int>(std::ceil(x - kRoundingGuard)); }
int guarded_floor(double x) { return static_cast<int>(std::floor(x + kRoundingGuard)); }

LowerBound clamp_lower(double raw) { return {raw, std::max(0, guarded_ceil(raw))}; }

Spectrum spectrum_of(const Graph& g, MatrixKind kind) {
  JacobiOptions opts;
  opts.compute_vectors = false;
  return group_spectrum(eig_sym(matrix(g, kind), opts).values);
}

}  // namespace

IndexInequalityResult index_inequality_check(int n, double rho) {
  IndexInequalityResult r;
  const double half = n / 2.0;
  r.slack = half * half - rho * (rho - 1.0);
  const double scale = std::max(1.0, half * half);
  r.equality = std::abs(r.slack) <= kIndexEqualityTolerance * scale;
  r.holds = r.slack >= 0.0 || r.equality;
  return r;
}

std::optional<DimWindow> dim_size_window(int n, double rho) {
  const double radicand = static_cast<double>(n) * n - 4.0 * (rho * rho - rho);
  if (!(radicand > 0.0)) return std::nullopt;
  const double root = std::sqrt(radicand);
  DimWindow w;
  w.root_lo = (n - root) / 4.0;
  w.root_hi = (n + root) / 4.0;
  w.lo = std::max(0, guarded_ceil(w.root_lo));
  w.hi = guarded_floor(w.root_hi);
  return w;
}

std::optional<LowerBound> dim_lower_bound_adjacency(int n, int min_degree, double rho) {
  if (min_degree < 1) return std::nullopt;
  const double d = min_degree;
  return clamp_lower(n * (2.0 * d - rho) / (2.0 * (2.0 * d - 1.0)));
}

std::optional<LowerBound> dim_lower_bound_laplacian(int n, int min_degree, double trace_l, double mu1) {
  if (min_degree < 1) return std::nullopt;
  const double d = min_degree;
  return clamp_lower((trace_l - n * (mu1 - 2.0 * d)) / (2.0 * (2.0 * d + 1.0)));
}

std::optional<LowerBound> dim_lower_bound_signless(int n, int min_degree, double trace_q, double q1) {
  if (min_degree < 1) return std::nullopt;
  const double d = min_degree;
  return clamp_lower((trace_q - n * (q1 - 2.0 * d)) / (2.0 * (2.0 * d - 1.0)));
}

UnitCounts unit_eigenvalue_counts(const Spectrum& adjacency_spectrum) {
  UnitCounts c;
  for (const auto& g : adjacency_spectrum.groups()) {
    if (g.value <= -1.0 + kUnitEigenvalueSlack) c.at_most_minus_one += g.multiplicity;
    if (g.value >= 1.0 - kUnitEigenvalueSlack) c.at_least_one += g.multiplicity;
  }
  return c;
}

int induced_matching_upper_bound(const Spectrum& adjacency_spectrum) {
  const auto c = unit_eigenvalue_counts(adjacency_spectrum);
  return std::min(c.at_most_minus_one, c.at_least_one);
}

bool interlacing_counts(const Spectrum& adjacency_spectrum, int m) {
  const auto c = unit_eigenvalue_counts(adjacency_spectrum);
  return c.at_most_minus_one >= m && c.at_least_one >= m;
}

BoundsReport full_report(const Graph& g) {
  BoundsReport r;
  r.n = g.order();
  r.min_degree = g.min_degree();
  r.edges = g.size();
  r.spectrum_a = spectrum_of(g, MatrixKind::Adjacency);
  r.spectrum_l = spectrum_of(g, MatrixKind::Laplacian);
  r.spectrum_q = spectrum_of(g, MatrixKind::SignlessLaplacian);
  r.rho_a = r.spectrum_a.largest();
  r.mu_1 = r.spectrum_l.largest();
  r.q_1 = r.spectrum_q.largest();
  r.trace_l = r.trace_q = 2.0 * static_cast<double>(g.size());

  r.index_inequality = index_inequality_check(r.n, r.rho_a);
  r.window = dim_size_window(r.n, r.rho_a);
  r.lb_adjacency = dim_lower_bound_adjacency(r.n, r.min_degree, r.rho_a);
  r.lb_laplacian = dim_lower_bound_laplacian(r.n, r.min_degree, r.trace_l, r.mu_1);
  r.lb_signless = dim_lower_bound_signless(r.n, r.min_degree, r.trace_q, r.q_1);
  r.unit_counts = unit_eigenvalue_counts(r.spectrum_a);
  r.ub_lambda_count = std::min(r.unit_counts.at_most_minus_one, r.unit_counts.at_least_one);
  return r;
}

}  // namespace dimspec
