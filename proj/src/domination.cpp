#include "mixdom/domination.hpp"

#include <algorithm>

namespace mixdom {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::EdgeHeavy: return "EdgeHeavy";
    case Regime::VertexFavorableTight: return "VertexFavorableTight";
    case Regime::EdgeFavorable: return "EdgeFavorable";
  }
  return "?";
}

MixedSet MixedSet::of(std::vector<VertexId> vs, std::vector<Edge> es) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return MixedSet{std::move(vs), std::move(es)};
}

DominationCheck check_mixed_domination(const Graph& g, const MixedSet& d) {
  int n = g.num_vertices();
  std::vector<char> in_vd(n, 0), touched(n, 0), vdom(n, 0);
  for (VertexId v : d.vertices) {
    if (!g.has_vertex(v)) throw std::invalid_argument("solution vertex " + std::to_string(v) + " not in graph");
    in_vd[v] = 1;
  }
  std::vector<char> in_ed(g.num_edges(), 0);
  for (const Edge& e : d.edges) {
    int idx = g.edge_index(e);
    if (idx < 0)
      throw std::invalid_argument("solution edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") not in graph");
    in_ed[idx] = 1;
    touched[e.u] = touched[e.v] = 1;  // covered by an edge element
    vdom[e.u] = vdom[e.v] = 1;
  }
  for (VertexId v = 0; v < n; v++) {
    if (!in_vd[v]) continue;
    touched[v] = 1;
    vdom[v] = 1;
    for (VertexId y : g.neighbors(v)) vdom[y] = 1;
  }
  // Edges first: the witness is the first failing edge if any, else the
  // first failing vertex.
  const auto& edges = g.edges();
  for (int i = 0; i < (int)edges.size(); i++) {
    if (in_ed[i]) continue;
    if (!touched[edges[i].u] && !touched[edges[i].v])
      return DominationCheck{false, Witness{edges[i]}};
  }
  for (VertexId v = 0; v < n; v++)
    if (!vdom[v]) return DominationCheck{false, Witness{v}};
  return DominationCheck{true, std::nullopt};
}

bool is_mixed_dominating_set(const Graph& g, const MixedSet& d) {
  return check_mixed_domination(g, d).dominating;
}

WeightedValue weight(const MixedSet& d, const WeightConfig& w) {
  WeightedValue out;
  out.vertex_count = (int)d.vertices.size();
  out.edge_count = (int)d.edges.size();
  out.value = Rational(out.vertex_count) * w.wv + Rational(out.edge_count) * w.we;
  return out;
}

std::vector<VertexId> closure_vertices(const MixedSet& d) {
  std::vector<VertexId> out = d.vertices;
  for (const Edge& e : d.edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : cover) {
    if (!g.has_vertex(v)) throw std::invalid_argument("cover vertex " + std::to_string(v) + " not in graph");
    in[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (!in[e.u] && !in[e.v]) return false;
  return true;
}

}  // namespace mixdom
