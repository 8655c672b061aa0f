#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimspec {

/// 1-based vertex label. All public I/O uses these labels.
using Vertex = int;

/// Undirected edge, always normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Builds a normalized edge; throws InputError on u == v.
Edge make_edge(Vertex a, Vertex b);

using EdgeSet = std::vector<Edge>;

/// Undirected simple graph on vertices 1..n. Immutable after construction.
class Graph {
 public:
  /// Validates labels, rejects self-loops, deduplicates and sorts edges.
  Graph(int n, std::span<const std::pair<int, int>> pairs);
  Graph(int n, std::span<const Edge> edges);

  /// Edgeless graph on n vertices.
  static Graph null_graph(int n);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const EdgeSet& edges() const { return edges_; }

  int degree(Vertex v) const;
  /// Sorted neighbour labels.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

  int min_degree() const;
  bool is_connected() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void build_adjacency();

  int n_;
  EdgeSet edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Convenience wrapper matching the library's free-function surface.
Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);

/// Disjoint union plus every cross edge; labels of g2 are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);

/// K_{M,S}: matching edges (2i-1, 2i) for i <= m, then every edge between
/// {1..2m} and {2m+1..2m+s}. Throws InputError if m < 1 or s < 1.
Graph generate_cdim(int m, int s);

int min_degree(const Graph& g);

/// Edge-list text format: '#' comments, header "n <count>", then "<u> <v>" lines.
Graph parse_graph(std::string_view text);
/// Canonical form: header line followed by lexicographically sorted edges.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

std::string to_string(const Edge& e);

}  // namespace dimspec
