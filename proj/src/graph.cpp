#include "dimspec/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "dimspec/errors.hpp"

namespace dimspec {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

namespace {

void check_order(int n) {
  if (n < 1) throw InputError("vertex count must be at least 1, got " + std::to_string(n));
}

void check_label(int n, Vertex v) {
  if (v < 1 || v > n) {
    throw InputError("vertex label " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> pairs) : n_(n) {
  check_order(n);
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    check_label(n, a);
    check_label(n, b);
    edges_.push_back(make_edge(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  build_adjacency();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  check_order(n);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_label(n, e.u);
    check_label(n, e.v);
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  build_adjacency();
}

Graph Graph::null_graph(int n) { return Graph(n, std::span<const Edge>{}); }

void Graph::build_adjacency() {
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const Edge& e : edges_) {
    adj_[e.u - 1].push_back(e.v);
    adj_[e.v - 1].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int Graph::degree(Vertex v) const {
  check_label(n_, v);
  return static_cast<int>(adj_[v - 1].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_label(n_, v);
  return adj_[v - 1];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  const auto& row = adj_[a - 1];
  return std::binary_search(row.begin(), row.end(), b);
}

int Graph::min_degree() const {
  std::size_t best = adj_.front().size();
  for (const auto& row : adj_) best = std::min(best, row.size());
  return static_cast<int>(best);
}

bool Graph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::queue<Vertex> frontier;
  frontier.push(1);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adj_[v - 1]) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n_;
}

Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs) { return Graph(n, pairs); }

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  EdgeSet edges;
  edges.reserve(g1.size() + g2.size() + static_cast<std::size_t>(n1) * n2);
  edges.insert(edges.end(), g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.push_back({e.u + n1, e.v + n1});
  for (Vertex a = 1; a <= n1; ++a) {
    for (Vertex b = 1; b <= n2; ++b) edges.push_back({a, b + n1});
  }
  return Graph(n1 + n2, edges);
}

Graph generate_cdim(int m, int s) {
  if (m < 1) throw InputError("matching size m must be at least 1");
  if (s < 1) throw InputError("independent set size s must be at least 1");
  EdgeSet matching;
  for (int i = 1; i <= m; ++i) matching.push_back({2 * i - 1, 2 * i});
  return join(Graph(2 * m, matching), Graph::null_graph(s));
}

int min_degree(const Graph& g) { return g.min_degree(); }

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "n" || !parse_int(toks[1], n)) {
        throw InputError(where + "expected header \"n <count>\"");
      }
      if (n < 1) throw InputError(where + "vertex count must be at least 1");
      continue;
    }
    int u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      throw InputError(where + "expected \"<u> <v>\"");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError(where + "vertex label out of range 1.." + std::to_string(n));
    }
    if (u == v) throw InputError(where + "self-loop at vertex " + std::to_string(u));
    pairs.emplace_back(u, v);
  }
  if (n < 0) throw InputError("missing header \"n <count>\"");
  return Graph(n, pairs);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file: " + path);
  out << serialize_graph(g);
}

}  // namespace dimspec
