#include "mixdom/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mixdom/lpvc.hpp"
#include "mixdom/matching.hpp"

namespace mixdom {

const char* method_name(Method m) {
  switch (m) {
    case Method::Exact: return "Exact";
    case Method::ApproxEdgeHeavy: return "ApproxEdgeHeavy";
    case Method::ApproxAlg1: return "ApproxAlg1";
    case Method::HeuristicNoGuarantee: return "HeuristicNoGuarantee";
  }
  return "?";
}

namespace {

MixedSet map_back(const MixedSet& sub, const std::vector<VertexId>& id_map) {
  std::vector<VertexId> vs;
  vs.reserve(sub.vertices.size());
  for (VertexId v : sub.vertices) vs.push_back(id_map[v]);
  std::vector<Edge> es;
  es.reserve(sub.edges.size());
  for (const Edge& e : sub.edges) es.emplace_back(id_map[e.u], id_map[e.v]);
  return MixedSet::of(std::move(vs), std::move(es));
}

// The LP-partition solution (vertex part V1, matching over the half part,
// leftover half vertices): a valid mixed dominating set on any graph without
// isolated vertices, whatever the weights.
MixedSet lp_matching_solution(const Graph& g) {
  auto [sol, part] = solve_lpvc_half_integral(g);
  auto sub = g.induced_subgraph(part.vhalf);
  Matching m = maximum_matching_general(sub.graph);
  std::vector<char> matched(sub.graph.num_vertices(), 0);
  std::vector<Edge> es;
  for (const Edge& e : m.edges) {
    matched[e.u] = matched[e.v] = 1;
    es.emplace_back(sub.id_map[e.u], sub.id_map[e.v]);
  }
  std::vector<VertexId> vs = part.v1;
  for (int i = 0; i < sub.graph.num_vertices(); i++)
    if (!matched[i]) vs.push_back(sub.id_map[i]);
  return MixedSet::of(std::move(vs), std::move(es));
}

// Branch-and-bound state. Elements are coded 0..n-1 for vertices and
// n..n+m-1 for edges, so sorting codes gives the canonical candidate order.
struct WmdSearch {
  const Graph& g;
  Rational wv, we, minw;
  int n, m;
  std::vector<std::vector<int>> inc;  // vertex -> incident edge indices, ascending
  std::vector<int> vcov, ecov;        // how many chosen elements satisfy each
  std::vector<char> vsel, esel, vban, eban;
  int nv = 0, ne = 0;
  Rational best_weight;
  std::vector<char> best_v, best_e;
  std::uint64_t budget, nodes = 0;
  bool exhausted = false;

  WmdSearch(const Graph& gg, const WeightConfig& w, std::uint64_t b)
      : g(gg), wv(w.wv), we(w.we), budget(b) {
    minw = wv < we ? wv : we;
    n = g.num_vertices();
    m = g.num_edges();
    inc.assign(n, {});
    for (int i = 0; i < m; i++) {
      inc[g.edges()[i].u].push_back(i);
      inc[g.edges()[i].v].push_back(i);
    }
    vcov.assign(n, 0);
    ecov.assign(m, 0);
    vsel.assign(n, 0);
    esel.assign(m, 0);
    vban.assign(n, 0);
    eban.assign(m, 0);
  }

  Rational cur_weight() const { return Rational(nv) * wv + Rational(ne) * we; }

  void seed(const MixedSet& d, const WeightConfig& w) {
    best_weight = weight(d, w).value;
    best_v.assign(n, 0);
    best_e.assign(m, 0);
    for (VertexId v : d.vertices) best_v[v] = 1;
    for (const Edge& e : d.edges) best_e[g.edge_index(e)] = 1;
  }

  void choose(int c) {
    if (c < n) {
      vsel[c] = 1;
      nv++;
      vcov[c]++;
      for (VertexId y : g.neighbors(c)) vcov[y]++;
      for (int ei : inc[c]) ecov[ei]++;
    } else {
      int ei = c - n;
      esel[ei] = 1;
      ne++;
      const Edge& e = g.edges()[ei];
      vcov[e.u]++;
      vcov[e.v]++;
      for (int f : inc[e.u]) ecov[f]++;
      for (int f : inc[e.v]) ecov[f]++;
    }
  }

  void unchoose(int c) {
    if (c < n) {
      vsel[c] = 0;
      nv--;
      vcov[c]--;
      for (VertexId y : g.neighbors(c)) vcov[y]--;
      for (int ei : inc[c]) ecov[ei]--;
    } else {
      int ei = c - n;
      esel[ei] = 0;
      ne--;
      const Edge& e = g.edges()[ei];
      vcov[e.u]--;
      vcov[e.v]--;
      for (int f : inc[e.u]) ecov[f]--;
      for (int f : inc[e.v]) ecov[f]--;
    }
  }

  int count_options(int elem) const {
    int k = 0;
    if (elem < n) {
      k += !vban[elem];
      for (VertexId y : g.neighbors(elem)) k += !vban[y];
      for (int ei : inc[elem]) k += !eban[ei];
    } else {
      const Edge& e = g.edges()[elem - n];
      k += !vban[e.u];
      k += !vban[e.v];
      for (int f : inc[e.u]) k += !eban[f];
      for (int f : inc[e.v])
        if (f != elem - n) k += !eban[f];
    }
    return k;
  }

  void collect_candidates(int elem, std::vector<int>& out) const {
    out.clear();
    if (elem < n) {
      if (!vban[elem]) out.push_back(elem);
      for (VertexId y : g.neighbors(elem))
        if (!vban[y]) out.push_back(y);
      for (int ei : inc[elem])
        if (!eban[ei]) out.push_back(n + ei);
    } else {
      const Edge& e = g.edges()[elem - n];
      if (!vban[e.u]) out.push_back(e.u);
      if (!vban[e.v]) out.push_back(e.v);
      for (int f : inc[e.u])
        if (!eban[f]) out.push_back(n + f);
      for (int f : inc[e.v])
        if (f != elem - n && !eban[f]) out.push_back(n + f);
    }
    std::sort(out.begin(), out.end());
  }

  // Undominated element with the fewest live dominators; -1 when everything
  // is dominated, -2 when some element has none left (dead branch).
  int select() const {
    int best = -1, best_k = std::numeric_limits<int>::max();
    for (int v = 0; v < n; v++) {
      if (vcov[v] > 0) continue;
      int k = count_options(v);
      if (k == 0) return -2;
      if (k < best_k) {
        best_k = k;
        best = v;
      }
    }
    for (int ei = 0; ei < m; ei++) {
      if (ecov[ei] > 0) continue;
      int k = count_options(n + ei);
      if (k == 0) return -2;
      if (k < best_k) {
        best_k = k;
        best = n + ei;
      }
    }
    return best;
  }

  void dfs() {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    int elem = select();
    if (elem == -2) return;
    if (elem == -1) {
      if (cur_weight() < best_weight) {
        best_weight = cur_weight();
        best_v.assign(vsel.begin(), vsel.end());
        best_e.assign(esel.begin(), esel.end());
      }
      return;
    }
    // Anything still undominated costs at least one more element.
    if (cur_weight() + minw >= best_weight) return;
    std::vector<int> cands;
    collect_candidates(elem, cands);
    std::vector<int> banned_here;
    for (int c : cands) {
      choose(c);
      dfs();
      unchoose(c);
      if (exhausted) break;
      if (c < n)
        vban[c] = 1;
      else
        eban[c - n] = 1;
      banned_here.push_back(c);
    }
    for (int c : banned_here) {
      if (c < n)
        vban[c] = 0;
      else
        eban[c - n] = 0;
    }
  }

  MixedSet best_set() const {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int v = 0; v < n; v++)
      if (best_v[v]) vs.push_back(v);
    for (int ei = 0; ei < m; ei++)
      if (best_e[ei]) es.push_back(g.edges()[ei]);
    return MixedSet{std::move(vs), std::move(es)};
  }
};

SolveResult make_result(const Graph& g, MixedSet d, const WeightConfig& w, Method method,
                        std::optional<int> guarantee) {
  (void)g;
  SolveResult r;
  r.weight = weight(d, w);
  r.solution = std::move(d);
  r.method = method;
  r.guarantee = guarantee;
  return r;
}

// Best known dominating set without searching: all vertices, the LP cover
// plus isolated vertices, and the LP/matching combination plus isolated
// vertices. Used to seed the branch-and-bound incumbent.
MixedSet initial_incumbent(const Graph& g, const WeightConfig& w) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  MixedSet best = MixedSet{all, {}};
  Rational best_w = weight(best, w).value;
  std::vector<VertexId> iso = g.isolated_vertices();
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); v++)
    if (g.degree(v) > 0) keep.push_back(v);
  if (!keep.empty()) {
    auto sub = g.induced_subgraph(keep);
    std::vector<VertexId> cov = lp_based_vertex_cover(sub.graph);
    MixedSet cands[2];
    cands[0] = map_back(MixedSet{cov, {}}, sub.id_map);
    cands[1] = map_back(lp_matching_solution(sub.graph), sub.id_map);
    for (MixedSet& c : cands) {
      c.vertices.insert(c.vertices.end(), iso.begin(), iso.end());
      c = MixedSet::of(std::move(c.vertices), std::move(c.edges));
      Rational cw = weight(c, w).value;
      if (cw < best_w) {
        best_w = cw;
        best = std::move(c);
      }
    }
  }
  return best;
}

}  // namespace

ExactResult exact_wmd(const Graph& g, const WeightConfig& w, std::uint64_t node_budget) {
  ExactResult out;
  if (g.num_vertices() == 0) {
    out.solved = true;
    out.best = make_result(g, MixedSet{}, w, Method::Exact, 1);
    return out;
  }
  if (w.wv.is_zero()) {
    std::vector<VertexId> all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    out.solved = true;
    out.best = make_result(g, MixedSet{std::move(all), {}}, w, Method::Exact, 1);
    return out;
  }
  if (w.we.is_zero()) {
    // Every edge for free dominates everything except isolated vertices,
    // and any dominating set must contain those.
    out.solved = true;
    out.best = make_result(g, MixedSet::of(g.isolated_vertices(), g.edges()), w, Method::Exact, 1);
    return out;
  }
  WmdSearch search(g, w, node_budget);
  search.seed(initial_incumbent(g, w), w);
  search.dfs();
  out.nodes = search.nodes;
  out.solved = !search.exhausted;
  MixedSet d = search.best_set();
  if (out.solved)
    out.best = make_result(g, std::move(d), w, Method::Exact, 1);
  else
    out.best = make_result(g, std::move(d), w, Method::HeuristicNoGuarantee, std::nullopt);
  return out;
}

namespace {

struct VcSearch {
  const Graph& g;
  int n;
  std::vector<char> sel, ban;
  int count = 0;
  int best_size;
  std::vector<char> best;
  std::uint64_t budget, nodes = 0;
  bool exhausted = false;

  VcSearch(const Graph& gg, std::uint64_t b) : g(gg), n(gg.num_vertices()), budget(b) {
    sel.assign(n, 0);
    ban.assign(n, 0);
  }

  int first_uncovered() const {
    const auto& es = g.edges();
    for (int i = 0; i < (int)es.size(); i++)
      if (!sel[es[i].u] && !sel[es[i].v]) return i;
    return -1;
  }

  void dfs() {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    int ei = first_uncovered();
    if (ei < 0) {
      if (count < best_size) {
        best_size = count;
        best.assign(sel.begin(), sel.end());
      }
      return;
    }
    if (count + 1 >= best_size) return;
    const Edge& e = g.edges()[ei];
    VertexId branch[2] = {e.u, e.v};
    std::vector<VertexId> banned_here;
    for (VertexId c : branch) {
      if (ban[c]) continue;
      sel[c] = 1;
      count++;
      dfs();
      sel[c] = 0;
      count--;
      if (exhausted) break;
      ban[c] = 1;
      banned_here.push_back(c);
    }
    for (VertexId c : banned_here) ban[c] = 0;
  }
};

}  // namespace

VertexCoverResult exact_vertex_cover(const Graph& g, std::uint64_t node_budget) {
  VertexCoverResult out;
  VcSearch search(g, node_budget);
  std::vector<VertexId> seed = lp_based_vertex_cover(g);
  search.best_size = (int)seed.size();
  search.best.assign(g.num_vertices(), 0);
  for (VertexId v : seed) search.best[v] = 1;
  search.dfs();
  out.nodes = search.nodes;
  out.solved = !search.exhausted;
  for (VertexId v = 0; v < g.num_vertices(); v++)
    if (search.best[v]) out.cover.push_back(v);
  return out;
}

SolveResult approx_edge_heavy(const Graph& g, const WeightConfig& w) {
  if (w.regime() != Regime::EdgeHeavy)
    throw std::invalid_argument("approx_edge_heavy needs w_e >= 2*w_v");
  if (!g.isolated_vertices().empty())
    throw std::invalid_argument("approx_edge_heavy: graph has isolated vertices");
  std::vector<VertexId> cov = lp_based_vertex_cover(g);
  return make_result(g, MixedSet{std::move(cov), {}}, w, Method::ApproxEdgeHeavy, 2);
}

SolveResult approx_alg1(const Graph& g, const WeightConfig& w) {
  if (w.regime() != Regime::VertexFavorableTight)
    throw std::invalid_argument("approx_alg1 needs w_v <= w_e < 2*w_v");
  if (!g.isolated_vertices().empty())
    throw std::invalid_argument("approx_alg1: graph has isolated vertices");
  return make_result(g, lp_matching_solution(g), w, Method::ApproxAlg1, 2);
}

SolveOutcome solve(const Graph& g, const WeightConfig& w, SolveMode mode,
                   std::uint64_t node_budget) {
  std::vector<VertexId> iso = g.isolated_vertices();
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < g.num_vertices(); v++)
    if (g.degree(v) > 0) keep.push_back(v);
  auto sub = g.induced_subgraph(keep);

  SolveOutcome out;
  SolveResult inner;
  if (mode == SolveMode::Exact) {
    ExactResult er = exact_wmd(sub.graph, w, node_budget);
    out.solved = er.solved;
    out.nodes = er.nodes;
    inner = std::move(er.best);
  } else {
    switch (w.regime()) {
      case Regime::EdgeHeavy:
        inner = approx_edge_heavy(sub.graph, w);
        break;
      case Regime::VertexFavorableTight:
        inner = approx_alg1(sub.graph, w);
        break;
      case Regime::EdgeFavorable: {
        ExactResult er = exact_wmd(sub.graph, w, node_budget);
        out.solved = er.solved;
        out.nodes = er.nodes;
        inner = std::move(er.best);  // already heuristic-tagged when unsolved
        break;
      }
    }
  }
  MixedSet full = map_back(inner.solution, sub.id_map);
  full.vertices.insert(full.vertices.end(), iso.begin(), iso.end());
  out.result = make_result(g, MixedSet::of(std::move(full.vertices), std::move(full.edges)), w,
                           inner.method, inner.guarantee);
  return out;
}

}  // namespace mixdom
