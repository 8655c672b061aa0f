#include "dimspec/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dimspec/eigen.hpp"
#include "dimspec/errors.hpp"
#include "dimspec/matrix.hpp"

namespace dimspec {

namespace {

void check_subset(const Graph& g, std::span<const Edge> matching) {
  for (const Edge& e : matching) {
    if (!g.has_edge(e.u, e.v)) throw InputError("edge " + to_string(e) + " is not an edge of the graph");
  }
}

/// owner[v-1] = index of the M-edge covering v, or -1. Empty if M is not a matching.
std::vector<int> matching_owner(const Graph& g, std::span<const Edge> matching) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < matching.size(); ++i) {
    for (Vertex x : {matching[i].u, matching[i].v}) {
      if (owner[x - 1] != -1) return {};
      owner[x - 1] = static_cast<int>(i);
    }
  }
  return owner;
}

/// Checks that (VM, S) is the partition of some K_{M,S} and returns its M.
std::optional<EdgeSet> verify_partition(const Graph& g, const std::vector<char>& in_m) {
  const int n = g.order();
  int vm_size = 0;
  for (char c : in_m) vm_size += c ? 1 : 0;
  const int s_size = n - vm_size;
  if (vm_size < 2 || vm_size % 2 != 0 || s_size < 1) return std::nullopt;

  EdgeSet matching;
  for (Vertex v = 1; v <= n; ++v) {
    const auto nbrs = g.neighbors(v);
    if (in_m[v - 1]) {
      if (static_cast<int>(nbrs.size()) != s_size + 1) return std::nullopt;
      int partners = 0;
      Vertex partner = 0;
      for (Vertex w : nbrs) {
        if (in_m[w - 1]) {
          ++partners;
          partner = w;
        }
      }
      if (partners != 1) return std::nullopt;
      if (v < partner) matching.push_back({v, partner});
    } else {
      if (static_cast<int>(nbrs.size()) != vm_size) return std::nullopt;
      for (Vertex w : nbrs) {
        if (!in_m[w - 1]) return std::nullopt;
      }
    }
  }
  return matching;
}

std::optional<DimCertificate> best_of(const Graph& g, const std::vector<std::vector<char>>& hypotheses) {
  std::optional<EdgeSet> best;
  for (const auto& h : hypotheses) {
    auto m = verify_partition(g, h);
    if (m && (!best || *m < *best)) best = std::move(m);
  }
  if (!best) return std::nullopt;
  return make_certificate(g, *best);
}

}  // namespace

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : set) {
    if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    in[v - 1] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (in[e.u - 1] && in[e.v - 1]) return false;
  }
  return true;
}

bool is_induced_matching(const Graph& g, std::span<const Edge> matching) {
  check_subset(g, matching);
  const auto owner = matching_owner(g, matching);
  if (owner.empty()) return false;
  for (const Edge& e : g.edges()) {
    const int a = owner[e.u - 1];
    const int b = owner[e.v - 1];
    if (a >= 0 && b >= 0 && a != b) return false;
  }
  return true;
}

bool is_dim(const Graph& g, std::span<const Edge> matching) {
  check_subset(g, matching);
  const auto owner = matching_owner(g, matching);
  if (owner.empty()) return false;
  for (const Edge& e : g.edges()) {
    const int a = owner[e.u - 1];
    const int b = owner[e.v - 1];
    if (a >= 0 && a == b) continue;  // e is itself in M
    const int touching = (a >= 0 ? 1 : 0) + (b >= 0 ? 1 : 0);
    if (touching != 1) return false;
  }
  return true;
}

bool is_complete_dim(const Graph& g, std::span<const Edge> matching) {
  const auto m = static_cast<std::size_t>(matching.size());
  const auto n = static_cast<std::size_t>(g.order());
  if (m == 0 || 2 * m >= n) return false;
  const std::size_t s = n - 2 * m;
  return g.size() == m + 2 * m * s;
}

DimCertificate make_certificate(const Graph& g, std::span<const Edge> matching) {
  DimCertificate cert;
  cert.matching.assign(matching.begin(), matching.end());
  std::sort(cert.matching.begin(), cert.matching.end());
  std::vector<char> in_m(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : cert.matching) in_m[e.u - 1] = in_m[e.v - 1] = 1;
  for (Vertex v = 1; v <= g.order(); ++v) (in_m[v - 1] ? cert.matched : cert.independent).push_back(v);
  cert.complete = is_complete_dim(g, cert.matching);
  return cert;
}

bool verify_certificate(const Graph& g, const DimCertificate& cert) {
  for (const Edge& e : cert.matching) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  if (!is_induced_matching(g, cert.matching) || !is_dim(g, cert.matching)) return false;
  if (!is_independent_set(g, cert.independent)) return false;

  std::set<Vertex> matched;
  for (const Edge& e : cert.matching) matched.insert({e.u, e.v});
  if (std::vector<Vertex>(matched.begin(), matched.end()) != cert.matched) return false;
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!matched.count(v)) rest.push_back(v);
  }
  if (rest != cert.independent) return false;

  if (cert.complete) {
    if (cert.independent.empty() || cert.matching.empty()) return false;
    for (Vertex x : cert.matched) {
      for (Vertex y : cert.independent) {
        if (!g.has_edge(x, y)) return false;
      }
    }
    if (g.size() != cert.matching.size() + cert.matched.size() * cert.independent.size()) return false;
  }
  return cert.complete == is_complete_dim(g, cert.matching);
}

std::optional<DimCertificate> recognize_cdim(const Graph& g) {
  const int n = g.order();
  std::set<int> degrees;
  for (Vertex v = 1; v <= n; ++v) degrees.insert(g.degree(v));
  if (degrees.size() > 2) return std::nullopt;

  std::vector<std::vector<char>> hypotheses;
  if (degrees.size() == 2) {
    // V(M) has degree s + 1 and S has degree 2m; try either assignment.
    for (int d : degrees) {
      std::vector<char> in_m(static_cast<std::size_t>(n), 0);
      for (Vertex v = 1; v <= n; ++v) in_m[v - 1] = g.degree(v) == d;
      hypotheses.push_back(std::move(in_m));
    }
  } else {
    // Regular: s + 1 = 2m, the degree partition says nothing.
    for (Vertex v = 1; v <= n; ++v) {
      const auto nbrs = g.neighbors(v);
      // v in S, so V(M) = N(v).
      std::vector<char> in_m(static_cast<std::size_t>(n), 0);
      for (Vertex w : nbrs) in_m[w - 1] = 1;
      hypotheses.push_back(in_m);
      // v in V(M) with partner w, so S = N(v) \ {w}.
      for (Vertex w : nbrs) {
        std::vector<char> alt(static_cast<std::size_t>(n), 1);
        for (Vertex x : nbrs) {
          if (x != w) alt[x - 1] = 0;
        }
        hypotheses.push_back(std::move(alt));
      }
    }
  }
  return best_of(g, hypotheses);
}

std::optional<DimCertificate> recognize_cdim_spectral(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraphError("spectral recognition needs a connected graph");
  const PrincipalPair pp = principal_pair(matrix(g, MatrixKind::Adjacency), MatrixKind::Adjacency);

  const auto n = static_cast<std::size_t>(g.order());
  double biggest = 0.0;
  for (double x : pp.vector) biggest = std::max(biggest, std::abs(x));
  const double tol = kLevelSetTolerance * biggest;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pp.vector[a] < pp.vector[b]; });
  std::vector<int> level(n, 0);
  int levels = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (pp.vector[order[k]] - pp.vector[order[k - 1]] > tol) ++levels;
    level[order[k]] = levels - 1;
  }

  if (levels > 2) return std::nullopt;
  if (levels == 1) return recognize_cdim(g);

  std::vector<std::vector<char>> hypotheses;
  for (int which = 0; which < 2; ++which) {
    std::vector<char> in_m(n, 0);
    for (std::size_t i = 0; i < n; ++i) in_m[i] = level[i] == which;
    hypotheses.push_back(std::move(in_m));
  }
  return best_of(g, hypotheses);
}

}  // namespace dimspec
