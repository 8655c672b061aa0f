#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dimspec/graph.hpp"

namespace dimspec::testing {

/// The 9-vertex graph with DIM {12, 34, 56}: K_{M,S} for M = {12,34,56},
/// S = {7,8,9} minus the ten cross edges 18 19 29 37 39 47 49 57 67 68.
inline Graph dim9_graph() {
  const std::vector<std::pair<int, int>> removed = {{1, 8}, {1, 9}, {2, 9}, {3, 7}, {3, 9},
                                                    {4, 7}, {4, 9}, {5, 7}, {6, 7}, {6, 8}};
  std::vector<std::pair<int, int>> pairs = {{1, 2}, {3, 4}, {5, 6}};
  for (int a = 1; a <= 6; ++a) {
    for (int b = 7; b <= 9; ++b) {
      if (std::find(removed.begin(), removed.end(), std::pair{a, b}) == removed.end()) pairs.emplace_back(a, b);
    }
  }
  return Graph(9, pairs);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(v, v + 1);
  return Graph(n, pairs);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(v, v + 1);
  pairs.emplace_back(n, 1);
  return Graph(n, pairs);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  return Graph(n, pairs);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 2; v <= leaves + 1; ++v) pairs.emplace_back(1, v);
  return Graph(leaves + 1, pairs);
}

inline Graph k2() { return complete_graph(2); }

/// Reference adjacency spectrum of a 12-vertex graph whose edge set is not
/// available.
inline std::vector<double> spectrum12_reference() {
  return {-2.156, -1.870, -1.597, -1.311, -0.897, -0.547, 0.034, 0.579, 1.386, 1.481, 2.308, 2.590};
}

}  // namespace dimspec::testing
