#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dimspec/graph.hpp"

namespace dimspec {

/// A DIM M together with the vertex partition it induces.
struct DimCertificate {
  EdgeSet matching;                  // sorted
  std::vector<Vertex> matched;       // V(M), sorted
  std::vector<Vertex> independent;   // S = V \ V(M), sorted
  bool complete = false;             // E(G) = M + all V(M)-S pairs and S nonempty
};

/// Throws InputError for labels outside 1..n.
bool is_independent_set(const Graph& g, std::span<const Vertex> set);

/// G[V(M)] is exactly the 1-regular graph with edge set M.
/// Throws InputError if M is not a subset of E(G).
bool is_induced_matching(const Graph& g, std::span<const Edge> matching);

/// M is a matching and every other edge shares an end-vertex with exactly one
/// M-edge. Throws InputError if M is not a subset of E(G).
bool is_dim(const Graph& g, std::span<const Edge> matching);

/// Whether M (assumed a DIM) leaves E(G) = M + every V(M)-S edge, S nonempty.
bool is_complete_dim(const Graph& g, std::span<const Edge> matching);

/// Builds the certificate for M, filling `complete`; does not check is_dim.
DimCertificate make_certificate(const Graph& g, std::span<const Edge> matching);

/// Recomputes every certificate invariant from scratch.
bool verify_certificate(const Graph& g, const DimCertificate& cert);

/// Polynomial recognition of K_{M,S} through the degree partition. Returns
/// the lexicographically least complete DIM, or nothing.
std::optional<DimCertificate> recognize_cdim(const Graph& g);

/// Recognition from the level sets of the principal adjacency eigenvector,
/// with combinatorial verification of each hypothesis. Regular graphs fall
/// back to recognize_cdim. Throws DisconnectedGraphError on disconnected input.
std::optional<DimCertificate> recognize_cdim_spectral(const Graph& g);

/// Relative tolerance for grouping eigenvector entries into level sets.
inline constexpr double kLevelSetTolerance = 1e-6;

}  // namespace dimspec
