#include "mixdom/lpvc.hpp"

#include <algorithm>
#include <numeric>

#include "mixdom/matching.hpp"

namespace mixdom {

std::pair<HalfIntegralSolution, LpPartition> solve_lpvc_half_integral(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::pair<VertexId, VertexId>> dc_edges;
  dc_edges.reserve(2 * g.num_edges());
  for (const Edge& e : g.edges()) {
    dc_edges.emplace_back(e.u, n + e.v);
    dc_edges.emplace_back(e.v, n + e.u);
  }
  Graph dc = Graph::build(2 * n, dc_edges);
  std::vector<VertexId> left(n), right(n);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), n);
  Matching mm = maximum_matching_bipartite(dc, left, right);
  std::vector<VertexId> cover = koenig_min_vertex_cover(dc, left, right, mm);

  std::vector<int> halves(n, 0);  // 2 * x_v
  for (VertexId c : cover) halves[c < n ? c : c - n]++;
  HalfIntegralSolution sol;
  sol.values.reserve(n);
  LpPartition part;
  for (VertexId v = 0; v < n; v++) {
    sol.values.emplace_back(halves[v], 2);
    if (halves[v] == 2)
      part.v1.push_back(v);
    else if (halves[v] == 1)
      part.vhalf.push_back(v);
    else
      part.v0.push_back(v);
  }
  sol.objective = Rational((long long)cover.size(), 2);
  for (const Edge& e : g.edges())
    if (halves[e.u] + halves[e.v] < 2)
      throw std::logic_error("lpvc: double-cover extraction produced an infeasible solution");
  return {std::move(sol), std::move(part)};
}

CrownCheck check_crown_properties(const Graph& g, const LpPartition& p) {
  int n = g.num_vertices();
  std::vector<int> cls(n, -1);  // 0, 1, 2 for v0, vhalf, v1
  for (VertexId v : p.v0) cls.at(v) = 0;
  for (VertexId v : p.vhalf) cls.at(v) = 1;
  for (VertexId v : p.v1) cls.at(v) = 2;
  for (VertexId v = 0; v < n; v++)
    if (cls[v] < 0) return {false, "vertex " + std::to_string(v) + " missing from partition"};

  for (VertexId v : p.v0)
    for (VertexId y : g.neighbors(v))
      if (cls[y] != 2)
        return {false, "V0 vertex " + std::to_string(v) + " has neighbor " + std::to_string(y) +
                           " outside V1"};

  // Crossing V0-V1 edges must hold a matching saturating V1.
  std::vector<int> pos(n, -1);
  int n0 = (int)p.v0.size(), n1 = (int)p.v1.size();
  for (int i = 0; i < n0; i++) pos[p.v0[i]] = i;
  for (int i = 0; i < n1; i++) pos[p.v1[i]] = n0 + i;
  std::vector<std::pair<VertexId, VertexId>> cross;
  for (VertexId v : p.v0)
    for (VertexId y : g.neighbors(v)) cross.emplace_back(pos[v], pos[y]);
  Graph cg = Graph::build(n0 + n1, cross);
  std::vector<VertexId> left(n0), right(n1);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), n0);
  Matching mm = maximum_matching_bipartite(cg, left, right);
  if (mm.size() != n1)
    return {false, "no V0-V1 matching saturating V1: best " + std::to_string(mm.size()) +
                       " of " + std::to_string(n1)};
  return {true, ""};
}

std::vector<VertexId> lp_based_vertex_cover(const Graph& g) {
  auto [sol, part] = solve_lpvc_half_integral(g);
  std::vector<VertexId> cover = part.v1;
  cover.insert(cover.end(), part.vhalf.begin(), part.vhalf.end());
  std::sort(cover.begin(), cover.end());
  return cover;
}

}  // namespace mixdom
