#include "mixdom/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mixdom {

namespace {

constexpr int kMaxN = 7;

struct PairTable {
  int n = 0;
  int pairs = 0;
  int idx[kMaxN][kMaxN] = {};                         // unordered pair -> bit
  std::vector<std::array<int, 2>> ends;               // bit -> pair
  std::vector<std::vector<int>> perm_bit;             // permutation -> bit remap

  explicit PairTable(int nn) : n(nn) {
    pairs = n * (n - 1) / 2;
    int k = 0;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++) {
        idx[u][v] = idx[v][u] = k;
        ends.push_back({u, v});
        k++;
      }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> remap(pairs);
      for (int b = 0; b < pairs; b++) remap[b] = idx[perm[ends[b][0]]][perm[ends[b][1]]];
      perm_bit.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool connected(std::uint32_t mask) const {
    std::uint32_t nbr[kMaxN] = {};
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      int b = __builtin_ctz(rest);
      nbr[ends[b][0]] |= 1u << ends[b][1];
      nbr[ends[b][1]] |= 1u << ends[b][0];
    }
    std::uint32_t all = (1u << n) - 1;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr[__builtin_ctz(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all;
  }

  // A graph is canonical when no vertex relabeling maps it to a numerically
  // smaller mask.
  bool canonical(std::uint32_t mask) const {
    for (size_t p = 1; p < perm_bit.size(); p++) {  // 0 is the identity
      const std::vector<int>& remap = perm_bit[p];
      std::uint32_t m2 = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        m2 |= 1u << remap[__builtin_ctz(rest)];
      if (m2 < mask) return false;
    }
    return true;
  }
};

}  // namespace

Graph graph_from_mask(int n, std::uint32_t mask) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("graph_from_mask: n must be in [1, 7]");
  std::vector<std::pair<VertexId, VertexId>> edges;
  int k = 0;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      if (mask & (1u << k)) edges.emplace_back(u, v);
      k++;
    }
  if (mask >> k) throw std::invalid_argument("graph_from_mask: mask has bits beyond the pairs");
  return Graph::build(n, edges);
}

std::vector<std::uint32_t> connected_canonical_masks_serial(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("enumeration: n must be in [1, 7]");
  PairTable t(n);
  std::vector<std::uint32_t> out;
  std::uint64_t total = 1ull << t.pairs;
  for (std::uint64_t mask = 0; mask < total; mask++)
    if (t.connected((std::uint32_t)mask) && t.canonical((std::uint32_t)mask))
      out.push_back((std::uint32_t)mask);
  return out;
}

std::vector<std::uint32_t> connected_canonical_masks(int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("enumeration: n must be in [1, 7]");
#ifndef _OPENMP
  return connected_canonical_masks_serial(n);
#else
  PairTable t(n);
  std::uint64_t total = 1ull << t.pairs;
  const std::uint64_t chunk = 1 << 12;
  int nchunks = (int)((total + chunk - 1) / chunk);
  std::vector<std::vector<std::uint32_t>> found(nchunks);
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < nchunks; c++) {
    std::uint64_t lo = (std::uint64_t)c * chunk;
    std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t mask = lo; mask < hi; mask++)
      if (t.connected((std::uint32_t)mask) && t.canonical((std::uint32_t)mask))
        found[c].push_back((std::uint32_t)mask);
  }
  std::vector<std::uint32_t> out;
  for (const auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
#endif
}

}  // namespace mixdom
