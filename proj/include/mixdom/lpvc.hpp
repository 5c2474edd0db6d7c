#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mixdom/graph.hpp"
#include "mixdom/rational.hpp"

namespace mixdom {

// Half-integral optimum of the vertex cover LP relaxation: each vertex gets a
// value in {0, 1/2, 1} with x_u + x_v >= 1 on every edge.
struct HalfIntegralSolution {
  std::vector<Rational> values;
  Rational objective;
};

struct LpPartition {
  std::vector<VertexId> v1;     // value 1
  std::vector<VertexId> vhalf;  // value 1/2
  std::vector<VertexId> v0;     // value 0
};

// Solved combinatorially through the bipartite double cover: every vertex v
// gets copies L_v and R_v, every edge uv contributes L_u R_v and L_v R_u, and
// a Koenig minimum cover C of that graph yields x_v = |{L_v, R_v} cap C| / 2.
// The objective equals |C| / 2 exactly.
std::pair<HalfIntegralSolution, LpPartition> solve_lpvc_half_integral(const Graph& g);

struct CrownCheck {
  bool ok = false;
  std::string violation;  // empty when ok
};

// Structure of an optimal partition: V0 vertices have all neighbors in V1,
// and the crossing edges contain a matching saturating V1.
CrownCheck check_crown_properties(const Graph& g, const LpPartition& p);

// V1 together with Vhalf: a vertex cover of size at most twice the minimum.
std::vector<VertexId> lp_based_vertex_cover(const Graph& g);

}  // namespace mixdom
