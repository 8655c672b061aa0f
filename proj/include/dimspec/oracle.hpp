#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dimspec/graph.hpp"

namespace dimspec {

/// Default guard on |E(G)| for the exhaustive routines.
inline constexpr std::size_t kOracleMaxEdges = 40;
/// Largest n accepted by all_graphs.
inline constexpr int kExhaustiveMaxOrder = 6;

/// Every DIM of a graph, in lexicographic order of the sorted edge lists.
struct OracleResult {
  std::vector<EdgeSet> dims;
  int max_induced_matching = 0;
  std::optional<int> min_dim_size;
  std::optional<int> max_dim_size;

  bool has_dim() const { return !dims.empty(); }
};

/// Backtracks over edges (in M / out of M) with vertex-state pruning.
/// Throws SizeGuardError if |E(G)| > max_edges.
OracleResult enumerate_dims(const Graph& g, std::size_t max_edges = kOracleMaxEdges);

/// Largest induced matching (0 for edgeless graphs).
int max_induced_matching(const Graph& g, std::size_t max_edges = kOracleMaxEdges);

/// All 2^(n(n-1)/2) labeled graphs on n vertices. Graph number `code` has
/// edge k (lexicographic pair order) iff bit k of code is set.
class AllGraphs {
 public:
  /// Throws SizeGuardError if n > kExhaustiveMaxOrder, InputError if n < 1.
  explicit AllGraphs(int n);

  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }
  Graph at(std::uint64_t code) const;

 private:
  int n_;
  std::vector<Edge> pairs_;
};

AllGraphs all_graphs(int n);

/// Reproducible G(n, p) stream. Graph k is drawn from an mt19937_64 seeded
/// with (seed, k), so any worker can produce any index independently.
class RandomGraphs {
 public:
  /// Throws InputError unless 0 <= p <= 1 and n >= 1.
  RandomGraphs(int n, std::uint64_t count, double edge_probability, std::uint64_t seed);

  std::uint64_t count() const { return count_; }
  std::uint64_t seed() const { return seed_; }
  Graph at(std::uint64_t index) const;

 private:
  int n_;
  std::uint64_t count_;
  double p_;
  std::uint64_t seed_;
};

RandomGraphs random_graphs(int n, std::uint64_t count, double edge_probability, std::uint64_t seed);

}  // namespace dimspec
