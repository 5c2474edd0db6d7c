#pragma once

// Small helpers shared by the test files.

#include <algorithm>
#include <vector>

#include "mixdom/generate.hpp"
#include "mixdom/graph.hpp"

namespace testutil {

using mixdom::Edge;
using mixdom::Graph;
using mixdom::VertexId;

// Random connected graph: a random tree plus G(n, p) edges.
inline Graph gen_connected(int n, double p, std::uint64_t seed) {
  Graph tree = mixdom::gen_tree(n, seed);
  Graph extra = mixdom::gen_gnp(n, p, seed ^ 0x5bd1e995u);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : extra.edges()) edges.emplace_back(e.u, e.v);
  return Graph::build(n, edges);
}

inline bool connected(const Graph& g) {
  int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId y : g.neighbors(v))
      if (!seen[y]) {
        seen[y] = 1;
        count++;
        stack.push_back(y);
      }
  }
  return count == n;
}

inline Graph petersen() {
  return Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace testutil
