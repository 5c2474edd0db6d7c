#pragma once

#include <cstdint>
#include <vector>

#include "mixdom/graph.hpp"

namespace mixdom {

// Edge masks over the n*(n-1)/2 vertex pairs in lexicographic (u, v) order:
// bit k set means pair k is an edge. Supported for n <= 7 (21 bits).
Graph graph_from_mask(int n, std::uint32_t mask);

// One canonical representative per isomorphism class of connected graphs on
// n vertices: the representative is the numerically smallest mask in its
// class. Ascending output. The parallel version splits the mask range across
// OpenMP threads and merges in range order, so both return identical vectors.
std::vector<std::uint32_t> connected_canonical_masks_serial(int n);
std::vector<std::uint32_t> connected_canonical_masks(int n);

}  // namespace mixdom
