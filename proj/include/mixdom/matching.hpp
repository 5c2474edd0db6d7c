#pragma once

#include <vector>

#include "mixdom/graph.hpp"

namespace mixdom {

// A set of pairwise endpoint-disjoint edges, sorted.
struct Matching {
  std::vector<Edge> edges;
  int size() const { return (int)edges.size(); }
};

bool is_valid_matching(const Graph& g, const Matching& m);

// Scans edges in canonical order, taking each one whose endpoints are free.
Matching greedy_maximal_matching(const Graph& g);

// Hopcroft-Karp. (left, right) must partition the vertex set with every edge
// crossing sides; throws std::invalid_argument otherwise.
Matching maximum_matching_bipartite(const Graph& g, const std::vector<VertexId>& left,
                                    const std::vector<VertexId>& right);

// Edmonds blossom algorithm, any graph.
Matching maximum_matching_general(const Graph& g);

// Minimum vertex cover of a bipartite graph extracted from a maximum matching
// via Koenig alternating reachability. Throws std::logic_error if the cover
// size disagrees with |mm|, which means mm was not maximum.
std::vector<VertexId> koenig_min_vertex_cover(const Graph& g, const std::vector<VertexId>& left,
                                              const std::vector<VertexId>& right,
                                              const Matching& mm);

}  // namespace mixdom
