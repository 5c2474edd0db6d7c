#include "mixdom/generate.hpp"

#include <cmath>
#include <stdexcept>

namespace mixdom {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must be in [0, 1]");
  SplitMix64 rng(seed);
  // threshold over 53-bit draws; p == 1 maps to 2^53 so every draw passes
  std::uint64_t threshold = (std::uint64_t)std::llround(p * 9007199254740992.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; u++)
    for (VertexId v = u + 1; v < n; v++)
      if ((rng.next() >> 11) < threshold) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph gen_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_tree: n must be positive");
  if (n == 1) return Graph::build(1, {});
  if (n == 2) return Graph::build(2, {{0, 1}});
  SplitMix64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = (int)rng.below(n);
  std::vector<int> deg(n, 1);
  for (int x : pruefer) deg[x]++;
  std::vector<std::pair<VertexId, VertexId>> edges;
  int ptr = 0;
  while (deg[ptr] != 1) ptr++;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ptr++;
      while (deg[ptr] != 1) ptr++;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);  // the largest vertex is never consumed
  return Graph::build(n, edges);
}

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("gen_path: n must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int v = 0; v + 1 < n; v++) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n must be at least 3");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int v = 0; v + 1 < n; v++) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::build(n, edges);
}

Graph gen_star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("gen_star: negative leaf count");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int k = 1; k <= leaves; k++) edges.emplace_back(0, k);
  return Graph::build(leaves + 1, edges);
}

Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("gen_complete: n must be positive");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace mixdom
