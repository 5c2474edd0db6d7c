#pragma once

// Brute-force reference implementations used only by tests. Each evaluates
// the relevant definition directly, so expected values never come from the
// code under test.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mixdom/domination.hpp"
#include "mixdom/graph.hpp"
#include "mixdom/rational.hpp"

namespace oracle {

using mixdom::Edge;
using mixdom::Graph;
using mixdom::Rational;
using mixdom::VertexId;
using mixdom::WeightConfig;

// Maximum matching size by subset DP: f(S) either skips the lowest vertex of
// S or matches it with a neighbor inside S.
inline int max_matching_bruteforce(const Graph& g) {
  int n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("matching oracle limited to n <= 20");
  std::vector<int> f(std::size_t(1) << n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); mask++) {
    int v = __builtin_ctz(mask);
    int best = f[mask & (mask - 1)];
    for (VertexId u : g.neighbors(v))
      if (mask >> u & 1) {
        int with = 1 + f[mask & ~(1u << v) & ~(1u << u)];
        if (with > best) best = with;
      }
    f[mask] = best;
  }
  return f[(1u << n) - 1];
}

inline int min_vertex_cover_bruteforce(const Graph& g) {
  int n = g.num_vertices();
  if (n > 22) throw std::invalid_argument("cover oracle limited to n <= 22");
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
    int k = __builtin_popcount(mask);
    if (k >= best) continue;
    bool covers = true;
    for (const Edge& e : g.edges())
      if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) {
        covers = false;
        break;
      }
    if (covers) best = k;
  }
  return best;
}

// Mixed domination test straight from the two defining conditions.
inline bool is_mds_definition(const Graph& g, std::uint32_t vmask, std::uint64_t emask) {
  const auto& edges = g.edges();
  int m = (int)edges.size();
  for (VertexId v = 0; v < g.num_vertices(); v++) {
    if (vmask >> v & 1) continue;
    bool ok = false;
    for (VertexId y : g.neighbors(v))
      if (vmask >> y & 1) {
        ok = true;
        break;
      }
    for (int i = 0; i < m && !ok; i++)
      if ((emask >> i & 1) && (edges[i].u == v || edges[i].v == v)) ok = true;
    if (!ok) return false;
  }
  for (int i = 0; i < m; i++) {
    if (emask >> i & 1) continue;
    bool ok = (vmask >> edges[i].u & 1) || (vmask >> edges[i].v & 1);
    for (int j = 0; j < m && !ok; j++)
      if ((emask >> j & 1) && (edges[j].u == edges[i].u || edges[j].u == edges[i].v ||
                               edges[j].v == edges[i].u || edges[j].v == edges[i].v))
        ok = true;
    if (!ok) return false;
  }
  return true;
}

// Exhaustive minimum mixed domination weight over all 2^(n+m) element subsets.
inline Rational wmd_bruteforce(const Graph& g, const WeightConfig& w) {
  int n = g.num_vertices(), m = g.num_edges();
  if (n + m > 24) throw std::invalid_argument("wmd oracle limited to n + m <= 24");
  bool found = false;
  Rational best;
  for (std::uint32_t vmask = 0; vmask < (1u << n); vmask++)
    for (std::uint64_t emask = 0; emask < (1ull << m); emask++) {
      if (!is_mds_definition(g, vmask, emask)) continue;
      Rational val = Rational(__builtin_popcount(vmask)) * w.wv +
                     Rational(__builtin_popcountll(emask)) * w.we;
      if (!found || val < best) {
        best = val;
        found = true;
      }
    }
  if (!found) throw std::logic_error("wmd oracle: no dominating set, impossible");
  return best;
}

// Minimum of 2*objective over every half-integral assignment (values in
// {0, 1/2, 1} per vertex, x_u + x_v >= 1 per edge), by 3^n enumeration.
inline long long lpvc_min_halfsum(const Graph& g) {
  int n = g.num_vertices();
  if (n > 13) throw std::invalid_argument("lp oracle limited to n <= 13");
  std::vector<int> a(n, 0);  // per-vertex value in half units: 0, 1, 2
  long long best = 2LL * n;
  for (;;) {
    bool feasible = true;
    for (const Edge& e : g.edges())
      if (a[e.u] + a[e.v] < 2) {
        feasible = false;
        break;
      }
    if (feasible) {
      long long sum = 0;
      for (int x : a) sum += x;
      if (sum < best) best = sum;
    }
    int i = 0;
    while (i < n && a[i] == 2) a[i++] = 0;
    if (i == n) break;
    a[i]++;
  }
  return best;
}

inline int set_cover_bruteforce(int n_elements, const std::vector<std::vector<int>>& sets) {
  int m = (int)sets.size();
  if (m > 20) throw std::invalid_argument("set cover oracle limited to 20 subsets");
  int best = m;
  for (std::uint32_t mask = 1; mask < (1u << m); mask++) {
    int k = __builtin_popcount(mask);
    if (k >= best) continue;
    std::vector<char> covered(n_elements + 1, 0);
    for (int j = 0; j < m; j++)
      if (mask >> j & 1)
        for (int e : sets[j]) covered[e] = 1;
    bool all = true;
    for (int e = 1; e <= n_elements && all; e++)
      if (!covered[e]) all = false;
    if (all) best = k;
  }
  return best;
}

// BFS 2-coloring; fills (left, right) and reports whether g is bipartite.
inline bool bipartite_sides(const Graph& g, std::vector<VertexId>& left,
                            std::vector<VertexId>& right) {
  int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; s++) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(v)) {
        if (color[y] == -1) {
          color[y] = 1 - color[v];
          stack.push_back(y);
        } else if (color[y] == color[v]) {
          return false;
        }
      }
    }
  }
  left.clear();
  right.clear();
  for (VertexId v = 0; v < n; v++) (color[v] == 0 ? left : right).push_back(v);
  return true;
}

}  // namespace oracle
