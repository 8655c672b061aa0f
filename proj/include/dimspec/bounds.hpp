#pragma once

#include <optional>

#include "dimspec/eigen.hpp"
#include "dimspec/graph.hpp"

namespace dimspec {

/// Guard applied toward the exact value before ceil/floor.
inline constexpr double kRoundingGuard = 1e-9;
/// One-sided slack when counting eigenvalues <= -1 or >= 1.
inline constexpr double kUnitEigenvalueSlack = 1e-7;
/// Slack for declaring (n/2)^2 = rho(rho - 1).
inline constexpr double kIndexEqualityTolerance = 1e-9;

/// (n/2)^2 >= rho(rho - 1) for every graph with a DIM.
struct IndexInequalityResult {
  bool holds = false;
  bool equality = false;  // within kIndexEqualityTolerance
  double slack = 0.0;     // (n/2)^2 - rho(rho - 1)
};
IndexInequalityResult index_inequality_check(int n, double rho);

/// Integer window [lo, hi] for the size of a DIM in a graph that is not
/// complete with respect to it. root_lo/root_hi are the unrounded ends.
struct DimWindow {
  int lo = 0;
  int hi = 0;
  double root_lo = 0.0;
  double root_hi = 0.0;
};
/// Empty when n^2 - 4(rho^2 - rho) <= 0 (not applicable).
std::optional<DimWindow> dim_size_window(int n, double rho);

/// A lower bound: the real expression and its ceiling clamped at 0.
struct LowerBound {
  double raw = 0.0;
  int value = 0;
};

/// ceil(n(2 delta - rho) / (2(2 delta - 1))). Empty when min degree is 0.
std::optional<LowerBound> dim_lower_bound_adjacency(int n, int min_degree, double rho);
/// ceil((tr L - n(mu1 - 2 delta)) / (2(2 delta + 1))). Empty when min degree is 0.
std::optional<LowerBound> dim_lower_bound_laplacian(int n, int min_degree, double trace_l, double mu1);
/// ceil((tr Q - n(q1 - 2 delta)) / (2(2 delta - 1))). Empty when min degree is 0.
std::optional<LowerBound> dim_lower_bound_signless(int n, int min_degree, double trace_q, double q1);

/// Eigenvalues <= -1 and >= 1, counted with multiplicity.
struct UnitCounts {
  int at_most_minus_one = 0;
  int at_least_one = 0;
};
UnitCounts unit_eigenvalue_counts(const Spectrum& adjacency_spectrum);

/// min(|Lambda-|, |Lambda+|): bounds every induced matching of the graph.
int induced_matching_upper_bound(const Spectrum& adjacency_spectrum);

/// Both counts are at least m.
bool interlacing_counts(const Spectrum& adjacency_spectrum, int m);

/// Every spectral quantity and bound for one graph. Bounds are conditional:
/// they constrain a DIM if one exists, and say nothing about existence.
struct BoundsReport {
  int n = 0;
  int min_degree = 0;
  std::size_t edges = 0;
  double rho_a = 0.0;
  double mu_1 = 0.0;
  double q_1 = 0.0;
  double trace_l = 0.0;
  double trace_q = 0.0;
  Spectrum spectrum_a;
  Spectrum spectrum_l;
  Spectrum spectrum_q;
  IndexInequalityResult index_inequality;
  std::optional<DimWindow> window;
  std::optional<LowerBound> lb_adjacency;
  std::optional<LowerBound> lb_laplacian;
  std::optional<LowerBound> lb_signless;
  UnitCounts unit_counts;
  int ub_lambda_count = 0;
};

BoundsReport full_report(const Graph& g);

}  // namespace dimspec
