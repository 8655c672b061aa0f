#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dimspec/graph.hpp"

namespace dimspec {

/// Every property checked per graph by the soundness sweep.
enum class Check : int {
  Window,             // lo <= |M| <= hi when G is not complete w.r.t. M
  LowerAdjacency,     // adjacency min-degree bound <= |M|
  LowerLaplacian,     // Laplacian min-degree bound <= |M|
  LowerSignless,      // signless Laplacian min-degree bound <= |M|
  LambdaUpper,        // min(|L-|, |L+|) >= largest induced matching
  Interlacing,        // >= m eigenvalues on each side of +-1
  IndexInequality,    // (n/2)^2 >= rho(rho - 1)
  IndexEquality,      // equality iff complete DIM with n = 4m
  RhoAdjacencyUpper,  // rho(A) <= closed-form K_{M,S} index
  RhoSignlessUpper,   // q1 <= closed-form K_{M,S} signless index
  LaplacianOrder,     // mu1 <= n
  RecognitionOracle,  // recognize_cdim agrees with exhaustive search
  RecognitionSpectral,  // spectral and combinatorial recognizers agree
  kCount
};

inline constexpr std::size_t kCheckCount = static_cast<std::size_t>(Check::kCount);

std::string_view to_string(Check check);

enum class SweepMode { Exhaustive, Random };

struct SweepConfig {
  int n = 5;
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t count = 10000;     // random mode only
  double edge_probability = 0.35;  // random mode only
  std::uint64_t seed = 1;          // random mode only
  int jobs = 1;
};

struct Violation {
  std::uint64_t index = 0;  // graph code (exhaustive) or stream index (random)
  Check check = Check::Window;
  std::string graph;        // serialized edge list
  std::string detail;

  bool operator<(const Violation& o) const {
    return index != o.index ? index < o.index : check < o.check;
  }
};

struct SweepReport {
  SweepConfig config;
  std::uint64_t graphs = 0;
  std::uint64_t graphs_with_dim = 0;
  std::uint64_t connected_graphs = 0;
  std::uint64_t complete_dim_graphs = 0;
  std::uint64_t index_equalities = 0;
  std::array<std::uint64_t, kCheckCount> evaluated{};
  std::array<std::uint64_t, kCheckCount> failed{};
  std::vector<Violation> violations;  // sorted; capped at kMaxRecordedViolations

  std::uint64_t total_violations() const;
  bool operator==(const SweepReport&) const = default;
};

inline constexpr std::size_t kMaxRecordedViolations = 200;

bool operator==(const SweepConfig& a, const SweepConfig& b);
bool operator==(const Violation& a, const Violation& b);

/// Throws SizeGuardError for exhaustive n > 6 or random n with more than
/// kOracleMaxEdges possible edges.
void validate_sweep_config(const SweepConfig& config);

/// OpenMP worker pool of config.jobs threads over graph indices.
SweepReport run_sweep(const SweepConfig& config);

/// Single-threaded reference; produces a report identical to run_sweep.
SweepReport run_sweep_serial(const SweepConfig& config);

/// Checks one graph, appending violations and bumping counters.
void sweep_graph(const Graph& g, std::uint64_t index, SweepReport& into);

}  // namespace dimspec
