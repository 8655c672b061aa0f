#include "dimspec/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#ifdef DIMSPEC_HAVE_OPENMP
#include <omp.h>
#endif

#include "dimspec/bounds.hpp"
#include "dimspec/cdim.hpp"
#include "dimspec/errors.hpp"
#include "dimspec/oracle.hpp"
#include "dimspec/recognition.hpp"

namespace dimspec {

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Window: return "window";
    case Check::LowerAdjacency: return "lower_bound_adjacency";
    case Check::LowerLaplacian: return "lower_bound_laplacian";
    case Check::LowerSignless: return "lower_bound_signless";
    case Check::LambdaUpper: return "lambda_upper_bound";
    case Check::Interlacing: return "interlacing_counts";
    case Check::IndexInequality: return "index_inequality";
    case Check::IndexEquality: return "index_equality";
    case Check::RhoAdjacencyUpper: return "rho_adjacency_upper";
    case Check::RhoSignlessUpper: return "rho_signless_upper";
    case Check::LaplacianOrder: return "laplacian_radius_order";
    case Check::RecognitionOracle: return "recognition_oracle";
    case Check::RecognitionSpectral: return "recognition_spectral";
    case Check::kCount: break;
  }
  return "unknown";
}

bool operator==(const SweepConfig& a, const SweepConfig& b) {
  return a.n == b.n && a.mode == b.mode && a.count == b.count && a.edge_probability == b.edge_probability &&
         a.seed == b.seed && a.jobs == b.jobs;
}

bool operator==(const Violation& a, const Violation& b) {
  return a.index == b.index && a.check == b.check && a.graph == b.graph && a.detail == b.detail;
}

std::uint64_t SweepReport::total_violations() const {
  std::uint64_t total = 0;
  for (auto f : failed) total += f;
  return total;
}

namespace {

constexpr double kRadiusSlack = 1e-9;

std::string compact(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " [";
  for (std::size_t i = 0; i < g.edges().size(); ++i) out << (i ? " " : "") << to_string(g.edges()[i]);
  out << "]";
  return out.str();
}

std::string edges_text(const EdgeSet& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? " " : "") + to_string(m[i]);
  return s + "}";
}

class Recorder {
 public:
  Recorder(const Graph& g, std::uint64_t index, SweepReport& into) : g_(g), index_(index), into_(into) {}

  void expect(Check check, bool ok, const std::string& detail) {
    const auto k = static_cast<std::size_t>(check);
    ++into_.evaluated[k];
    if (ok) return;
    ++into_.failed[k];
    if (into_.violations.size() < kMaxRecordedViolations) {
      into_.violations.push_back({index_, check, compact(g_), detail});
    }
  }

 private:
  const Graph& g_;
  std::uint64_t index_;
  SweepReport& into_;
};

void merge_into(SweepReport& total, SweepReport&& part) {
  total.graphs += part.graphs;
  total.graphs_with_dim += part.graphs_with_dim;
  total.connected_graphs += part.connected_graphs;
  total.complete_dim_graphs += part.complete_dim_graphs;
  total.index_equalities += part.index_equalities;
  for (std::size_t k = 0; k < kCheckCount; ++k) {
    total.evaluated[k] += part.evaluated[k];
    total.failed[k] += part.failed[k];
  }
  total.violations.insert(total.violations.end(), std::make_move_iterator(part.violations.begin()),
                          std::make_move_iterator(part.violations.end()));
}

void finish(SweepReport& report) {
  std::sort(report.violations.begin(), report.violations.end());
  if (report.violations.size() > kMaxRecordedViolations) report.violations.resize(kMaxRecordedViolations);
}

std::uint64_t graph_count(const SweepConfig& c) {
  return c.mode == SweepMode::Exhaustive ? all_graphs(c.n).count() : c.count;
}

}  // namespace

void sweep_graph(const Graph& g, std::uint64_t index, SweepReport& into) {
  Recorder rec(g, index, into);
  ++into.graphs;
  const int n = g.order();
  const BoundsReport b = full_report(g);
  const OracleResult oracle = enumerate_dims(g);
  const bool connected = g.is_connected();
  if (connected) ++into.connected_graphs;

  rec.expect(Check::LaplacianOrder, b.mu_1 <= n + kRadiusSlack * n,
             "mu1 = " + std::to_string(b.mu_1) + " > n");
  rec.expect(Check::LambdaUpper, b.ub_lambda_count >= oracle.max_induced_matching,
             "Lambda bound " + std::to_string(b.ub_lambda_count) + " < induced matching " +
                 std::to_string(oracle.max_induced_matching));
  rec.expect(Check::Interlacing, interlacing_counts(b.spectrum_a, oracle.max_induced_matching),
             "fewer than m eigenvalues beyond +-1 for m = " + std::to_string(oracle.max_induced_matching));

  // Recognition against ground truth.
  const auto cert = recognize_cdim(g);
  bool oracle_complete = false;
  int complete_size = 0;
  for (const auto& m : oracle.dims) {
    if (is_complete_dim(g, m)) {
      oracle_complete = true;
      complete_size = static_cast<int>(m.size());
    }
  }
  if (cert) ++into.complete_dim_graphs;
  rec.expect(Check::RecognitionOracle,
             cert.has_value() == oracle_complete && (!cert || verify_certificate(g, *cert)),
             std::string("recognize_cdim ") + (cert ? "accepted" : "rejected") + ", oracle says " +
                 (oracle_complete ? "complete" : "not complete"));
  if (connected) {
    const auto spectral = recognize_cdim_spectral(g);
    const bool agree = spectral.has_value() == cert.has_value() && (!cert || spectral->matching == cert->matching);
    rec.expect(Check::RecognitionSpectral, agree,
               std::string("spectral ") + (spectral ? edges_text(spectral->matching) : "none") + " vs combinatorial " +
                   (cert ? edges_text(cert->matching) : "none"));
  }

  if (!oracle.has_dim()) return;
  ++into.graphs_with_dim;

  rec.expect(Check::IndexInequality, b.index_inequality.holds, "slack " + std::to_string(b.index_inequality.slack));
  if (b.index_inequality.equality) ++into.index_equalities;
  const bool equality_expected = cert && n == 4 * static_cast<int>(cert->matching.size());
  rec.expect(Check::IndexEquality, b.index_inequality.equality == equality_expected,
             std::string("equality ") + (b.index_inequality.equality ? "found" : "absent") + " but complete DIM with n = 4m " +
                 (equality_expected ? "present" : "absent") + " (complete size " + std::to_string(complete_size) + ")");

  std::set<int> sizes;
  for (const auto& m : oracle.dims) {
    const int size = static_cast<int>(m.size());
    sizes.insert(size);
    if (!is_complete_dim(g, m)) {
      const bool ok = b.window && b.window->lo <= size && size <= b.window->hi;
      rec.expect(Check::Window, ok,
                 "DIM " + edges_text(m) + " outside window " +
                     (b.window ? "[" + std::to_string(b.window->lo) + "," + std::to_string(b.window->hi) + "]"
                               : std::string("n/a")));
    }
  }

  for (int size : sizes) {
    if (b.lb_adjacency) {
      rec.expect(Check::LowerAdjacency, b.lb_adjacency->value <= size,
                 "bound " + std::to_string(b.lb_adjacency->value) + " > m = " + std::to_string(size));
    }
    if (b.lb_laplacian) {
      rec.expect(Check::LowerLaplacian, b.lb_laplacian->value <= size,
                 "bound " + std::to_string(b.lb_laplacian->value) + " > m = " + std::to_string(size));
    }
    if (b.lb_signless) {
      rec.expect(Check::LowerSignless, b.lb_signless->value <= size,
                 "bound " + std::to_string(b.lb_signless->value) + " > m = " + std::to_string(size));
    }
    if (size >= 1 && n >= 2 * size + 1) {
      const auto ub = cdim_radius_upper_bounds(n, size);
      rec.expect(Check::RhoAdjacencyUpper, b.rho_a <= ub.adjacency + kRadiusSlack * ub.adjacency,
                 "rho(A) = " + std::to_string(b.rho_a) + " > " + std::to_string(ub.adjacency));
      rec.expect(Check::RhoSignlessUpper, b.q_1 <= ub.signless + kRadiusSlack * ub.signless,
                 "q1 = " + std::to_string(b.q_1) + " > " + std::to_string(ub.signless));
    }
  }
}

void validate_sweep_config(const SweepConfig& c) {
  if (c.n < 1) throw InputError("sweep order must be at least 1");
  if (c.jobs < 1) throw InputError("--jobs must be at least 1");
  if (c.mode == SweepMode::Exhaustive) {
    if (c.n > kExhaustiveMaxOrder) {
      throw SizeGuardError("exhaustive sweep is limited to n <= " + std::to_string(kExhaustiveMaxOrder));
    }
  } else {
    const auto max_edges = static_cast<std::size_t>(c.n) * (c.n - 1) / 2;
    if (max_edges > kOracleMaxEdges) {
      throw SizeGuardError("random sweep graphs on " + std::to_string(c.n) + " vertices may exceed the " +
                           std::to_string(kOracleMaxEdges) + "-edge oracle guard");
    }
    if (!(c.edge_probability >= 0.0 && c.edge_probability <= 1.0)) {
      throw InputError("edge probability must lie in [0, 1]");
    }
  }
}

SweepReport run_sweep_serial(const SweepConfig& config) {
  validate_sweep_config(config);
  SweepReport report;
  report.config = config;
  const std::uint64_t total = graph_count(config);
  if (config.mode == SweepMode::Exhaustive) {
    const AllGraphs graphs(config.n);
    for (std::uint64_t i = 0; i < total; ++i) sweep_graph(graphs.at(i), i, report);
  } else {
    const RandomGraphs graphs(config.n, config.count, config.edge_probability, config.seed);
    for (std::uint64_t i = 0; i < total; ++i) sweep_graph(graphs.at(i), i, report);
  }
  finish(report);
  return report;
}

SweepReport run_sweep(const SweepConfig& config) {
  validate_sweep_config(config);
#ifndef DIMSPEC_HAVE_OPENMP
  return run_sweep_serial(config);
#else
  SweepReport report;
  report.config = config;
  const auto total = static_cast<std::int64_t>(graph_count(config));
  const bool exhaustive = config.mode == SweepMode::Exhaustive;
  const std::optional<AllGraphs> every = exhaustive ? std::optional<AllGraphs>(AllGraphs(config.n)) : std::nullopt;
  const std::optional<RandomGraphs> sampled =
      exhaustive ? std::nullopt
                 : std::optional<RandomGraphs>(RandomGraphs(config.n, config.count, config.edge_probability, config.seed));

#pragma omp parallel num_threads(config.jobs)
  {
    SweepReport local;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      sweep_graph(exhaustive ? every->at(idx) : sampled->at(idx), idx, local);
    }
#pragma omp critical(dimspec_sweep_merge)
    merge_into(report, std::move(local));
  }
  finish(report);
  return report;
#endif
}

}  // namespace dimspec
