#include "dimspec/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "dimspec/errors.hpp"
#include "dimspec/recognition.hpp"

namespace dimspec {

namespace {

void check_guard(const Graph& g, std::size_t max_edges) {
  if (g.size() > max_edges) {
    throw SizeGuardError("graph has " + std::to_string(g.size()) + " edges; exhaustive search is limited to " +
                         std::to_string(max_edges));
  }
}

enum class VState : unsigned char { Free, Matched, Single };

class DimSearch {
 public:
  explicit DimSearch(const Graph& g) : g_(g), edges_(g.edges()) {
    const auto n = static_cast<std::size_t>(g.order());
    state_.assign(n, VState::Free);
    last_edge_.assign(n, -1);
    incident_.assign(n, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (Vertex x : {edges_[i].u, edges_[i].v}) {
        last_edge_[x - 1] = static_cast<int>(i);
        incident_[x - 1].push_back(i);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (last_edge_[v] < 0) state_[v] = VState::Single;
    }
  }

  std::vector<EdgeSet> run() {
    descend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  Vertex other(std::size_t edge, Vertex x) const { return edges_[edge].u == x ? edges_[edge].v : edges_[edge].u; }

  // x just became Matched: every earlier (hence out-of-M) edge at x must not
  // reach another matched vertex.
  bool matched_ok(Vertex x, std::size_t current) const {
    for (std::size_t e : incident_[x - 1]) {
      if (e >= current) break;
      if (state_[other(e, x) - 1] == VState::Matched) return false;
    }
    return true;
  }

  // x just became Single: no neighbour may already be Single.
  bool single_ok(Vertex x) const {
    for (std::size_t e : incident_[x - 1]) {
      if (state_[other(e, x) - 1] == VState::Single) return false;
    }
    return true;
  }

  // Finalize endpoints whose last incident edge is `i`. Returns the vertices
  // that were turned Single (for undo) or false on conflict.
  bool finalize(std::size_t i, std::vector<Vertex>& turned) {
    for (Vertex x : {edges_[i].u, edges_[i].v}) {
      if (last_edge_[x - 1] == static_cast<int>(i) && state_[x - 1] == VState::Free) {
        state_[x - 1] = VState::Single;
        turned.push_back(x);
        if (!single_ok(x)) return false;
      }
    }
    return true;
  }

  void undo(const std::vector<Vertex>& turned) {
    for (Vertex x : turned) state_[x - 1] = VState::Free;
  }

  void descend(std::size_t i) {
    if (i == edges_.size()) {
      assert(is_dim(g_, chosen_));
      found_.push_back(chosen_);
      return;
    }
    const auto [u, v] = edges_[i];
    VState& su = state_[u - 1];
    VState& sv = state_[v - 1];

    if (su == VState::Free && sv == VState::Free) {
      su = sv = VState::Matched;
      if (matched_ok(u, i) && matched_ok(v, i)) {
        chosen_.push_back(edges_[i]);
        descend(i + 1);
        chosen_.pop_back();
      }
      su = sv = VState::Free;
    }

    if (!(su == VState::Matched && sv == VState::Matched)) {
      std::vector<Vertex> turned;
      if (finalize(i, turned)) descend(i + 1);
      undo(turned);
    }
  }

  const Graph& g_;
  const EdgeSet& edges_;
  std::vector<VState> state_;
  std::vector<int> last_edge_;
  std::vector<std::vector<std::size_t>> incident_;
  EdgeSet chosen_;
  std::vector<EdgeSet> found_;
};

class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Graph& g)
      : g_(g), edges_(g.edges()), matched_(static_cast<std::size_t>(g.order()), 0),
        near_(static_cast<std::size_t>(g.order()), 0) {}

  int run() {
    descend(0, 0);
    return best_;
  }

 private:
  bool blocked(Vertex x) const { return matched_[x - 1] || near_[x - 1] > 0; }

  void mark(Vertex x, int delta) {
    for (Vertex w : g_.neighbors(x)) near_[w - 1] += delta;
  }

  void descend(std::size_t i, int size) {
    best_ = std::max(best_, size);
    if (i == edges_.size() || size + static_cast<int>(edges_.size() - i) <= best_) return;
    const auto [u, v] = edges_[i];
    if (!blocked(u) && !blocked(v)) {
      // u and v are adjacent to each other; that is the M-edge itself.
      matched_[u - 1] = matched_[v - 1] = 1;
      mark(u, 1);
      mark(v, 1);
      // Any other matched vertex adjacent to u or v would have blocked them.
      descend(i + 1, size + 1);
      mark(u, -1);
      mark(v, -1);
      matched_[u - 1] = matched_[v - 1] = 0;
    }
    descend(i + 1, size);
  }

  const Graph& g_;
  const EdgeSet& edges_;
  std::vector<char> matched_;
  std::vector<int> near_;
  int best_ = 0;
};

}  // namespace

OracleResult enumerate_dims(const Graph& g, std::size_t max_edges) {
  check_guard(g, max_edges);
  OracleResult r;
  r.dims = DimSearch(g).run();
  r.max_induced_matching = InducedMatchingSearch(g).run();
  for (const auto& m : r.dims) {
    const int size = static_cast<int>(m.size());
    r.min_dim_size = std::min(r.min_dim_size.value_or(size), size);
    r.max_dim_size = std::max(r.max_dim_size.value_or(size), size);
  }
  return r;
}

int max_induced_matching(const Graph& g, std::size_t max_edges) {
  check_guard(g, max_edges);
  return InducedMatchingSearch(g).run();
}

AllGraphs::AllGraphs(int n) : n_(n) {
  if (n < 1) throw InputError("graph order must be at least 1");
  if (n > kExhaustiveMaxOrder) {
    throw SizeGuardError("exhaustive enumeration is limited to n <= " + std::to_string(kExhaustiveMaxOrder));
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) pairs_.push_back({u, v});
  }
}

Graph AllGraphs::at(std::uint64_t code) const {
  EdgeSet edges;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (code >> k & 1u) edges.push_back(pairs_[k]);
  }
  return Graph(n_, edges);
}

AllGraphs all_graphs(int n) { return AllGraphs(n); }

RandomGraphs::RandomGraphs(int n, std::uint64_t count, double edge_probability, std::uint64_t seed)
    : n_(n), count_(count), p_(edge_probability), seed_(seed) {
  if (n < 1) throw InputError("graph order must be at least 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
}

Graph RandomGraphs::at(std::uint64_t index) const {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  EdgeSet edges;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p_) edges.push_back({u, v});
    }
  }
  return Graph(n_, edges);
}

RandomGraphs random_graphs(int n, std::uint64_t count, double edge_probability, std::uint64_t seed) {
  return RandomGraphs(n, count, edge_probability, seed);
}

}  // namespace dimspec
