#include "mixdom/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace mixdom {

GiGadget build_gi(const Graph& g, int i) {
  int n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("build_gi: empty base graph");
  if (i < 1 || i > n) throw std::invalid_argument("build_gi: i must satisfy 1 <= i <= n");
  if (!g.isolated_vertices().empty())
    throw std::invalid_argument("build_gi: base graph has isolated vertices");

  GiGadget out;
  out.i = i;
  out.n_original = n;
  int next = n;
  for (int j = 0; j < i; j++) out.a_ids.push_back(next++);
  for (int j = 0; j < i; j++) out.b_ids.push_back(next++);
  out.hub = next++;
  for (int k = 0; k < 2 * n; k++) out.leaf_ids.push_back(next++);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (int j = 0; j < i; j++) edges.emplace_back(out.a_ids[j], out.b_ids[j]);
  for (int j = 0; j < i; j++)
    for (VertexId v = 0; v < n; v++) edges.emplace_back(v, out.a_ids[j]);
  for (VertexId u = 0; u < next; u++)
    if (u != out.hub) edges.emplace_back(out.hub, u);
  out.graph = Graph::build(next, edges);
  return out;
}

GiIdentityReport gi_optimum_identity_check(const Graph& g, const WeightConfig& w,
                                           std::uint64_t node_budget) {
  if (w.regime() != Regime::VertexFavorableTight)
    throw std::invalid_argument("gi identity needs w_v <= w_e < 2*w_v");
  GiIdentityReport rep;
  VertexCoverResult vc = exact_vertex_cover(g, node_budget);
  if (!vc.solved) return rep;
  rep.tau = (int)vc.cover.size();
  if (rep.tau < 1 || rep.tau > g.num_vertices())
    throw std::invalid_argument("gi identity: base graph needs 1 <= tau <= n");
  GiGadget gadget = build_gi(g, rep.tau);
  ExactResult ex = exact_wmd(gadget.graph, w, node_budget);
  if (!ex.solved) return rep;
  rep.checked = true;
  rep.expected = w.wv + Rational(rep.tau) * w.we;
  rep.actual = ex.best.weight.value;
  rep.holds = rep.actual == rep.expected;
  return rep;
}

std::vector<VertexId> vc_from_wmd(const Graph& g, const MixedSet& d) {
  if (!is_mixed_dominating_set(g, d))
    throw std::invalid_argument("vc_from_wmd: not a mixed dominating set");
  std::vector<VertexId> cover = closure_vertices(d);
  if (!is_vertex_cover(g, cover))
    throw std::logic_error("vc_from_wmd: closure failed to cover an edge");
  return cover;
}

SetCoverInstance SetCoverInstance::make(int n, std::vector<std::vector<int>> sets) {
  if (n < 1) throw std::invalid_argument("set cover: empty universe");
  if (sets.empty()) throw std::invalid_argument("set cover: no subsets");
  std::vector<char> seen(n + 1, 0);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw std::invalid_argument("set cover: empty subset");
    for (int e : s) {
      if (e < 1 || e > n) throw std::invalid_argument("set cover: element out of range");
      seen[e] = 1;
    }
  }
  for (int e = 1; e <= n; e++)
    if (!seen[e]) throw std::invalid_argument("set cover: element " + std::to_string(e) +
                                              " appears in no subset");
  SetCoverInstance sc;
  sc.n_elements = n;
  sc.sets = std::move(sets);
  return sc;
}

SetCoverInstance read_setcover(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::vector<int>> sets;
  while (std::getline(in, line)) {
    lineno++;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (n < 0) {
      if (tag != "u") throw ParseError(lineno, "expected 'u <n> <m>' header");
      if (!(ls >> n >> m) || n < 1 || m < 1) throw ParseError(lineno, "malformed header");
      continue;
    }
    if (tag != "s") throw ParseError(lineno, "expected 's <e1> <e2> ...'");
    if ((long long)sets.size() >= m) throw ParseError(lineno, "more subset lines than header m");
    std::vector<int> s;
    long long e;
    while (ls >> e) {
      if (e < 1 || e > n) throw ParseError(lineno, "element out of range");
      s.push_back((int)e);
    }
    if (!ls.eof()) throw ParseError(lineno, "malformed subset line");
    if (s.empty()) throw ParseError(lineno, "empty subset");
    sets.push_back(std::move(s));
  }
  if (n < 0) throw ParseError(lineno, "missing 'u' header");
  if ((long long)sets.size() != m)
    throw ParseError(lineno, "header promises " + std::to_string(m) + " subsets, file has " +
                                 std::to_string(sets.size()));
  try {
    return SetCoverInstance::make((int)n, std::move(sets));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(lineno, ex.what());
  }
}

SetCoverInstance read_setcover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set cover file: " + path);
  return read_setcover(in);
}

namespace {

int compute_q(int n_elements, int m) {
  if (n_elements == 1)
    throw std::invalid_argument("set cover gadget: instance too small for the reduction (q = 0)");
  long double x = (long double)m * std::log((long double)n_elements);
  long double nearest = std::round(x);
  if (std::fabs(x - nearest) < 1e-9L)
    throw std::invalid_argument(
        "set cover gadget: m * ln(n) is within 1e-9 of an integer; pass q explicitly");
  int q = (int)std::floor(x);
  if (q < 1)
    throw std::invalid_argument("set cover gadget: instance too small for the reduction (q = 0)");
  return q;
}

}  // namespace

SetCoverGadget build_setcover_gadget(const SetCoverInstance& sc, std::optional<int> q_override) {
  int m = (int)sc.sets.size();
  int q = q_override ? *q_override : compute_q(sc.n_elements, m);
  if (q < 1) throw std::invalid_argument("set cover gadget: q must be positive");
  SetCoverGadget out;
  out.q = q;
  out.layers = q * q + 1;
  out.n_elements = sc.n_elements;
  out.num_sets = m;
  out.weights = WeightConfig(Rational(1), Rational(1, q));
  long long nv = (long long)m + (long long)sc.n_elements * out.layers;
  if (nv > 2'000'000) throw std::invalid_argument("set cover gadget: instance too large");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int j = 0; j < m; j++)
    for (int e : sc.sets[j])
      for (int layer = 1; layer <= out.layers; layer++)
        edges.emplace_back(out.set_vertex(j), out.element_copy(e, layer));
  out.graph = Graph::build((int)nv, edges);
  return out;
}

ScExtraction sc_from_mds(const SetCoverInstance& sc, const SetCoverGadget& gadget,
                         const MixedSet& d) {
  if (!is_mixed_dominating_set(gadget.graph, d))
    throw std::invalid_argument("sc_from_mds: not a mixed dominating set of the gadget");
  ScExtraction out;
  std::vector<char> in_vd(gadget.graph.num_vertices(), 0);
  for (VertexId v : d.vertices) in_vd[v] = 1;
  for (int j = 0; j < gadget.num_sets; j++)
    if (in_vd[gadget.set_vertex(j)]) out.chosen_sets.push_back(j);
  std::vector<char> covered(sc.n_elements + 1, 0);
  for (int j : out.chosen_sets)
    for (int e : sc.sets[j]) covered[e] = 1;
  out.covers = true;
  for (int e = 1; e <= sc.n_elements; e++)
    if (!covered[e]) out.covers = false;
  return out;
}

int exhaustive_set_cover_opt(const SetCoverInstance& sc) {
  int m = (int)sc.sets.size();
  if (m > 20) throw std::invalid_argument("exhaustive set cover limited to 20 subsets");
  int best = m;
  for (unsigned mask = 1; mask < (1u << m); mask++) {
    int k = __builtin_popcount(mask);
    if (k >= best) continue;
    std::vector<char> covered(sc.n_elements + 1, 0);
    for (int j = 0; j < m; j++)
      if (mask & (1u << j))
        for (int e : sc.sets[j]) covered[e] = 1;
    bool all = true;
    for (int e = 1; e <= sc.n_elements && all; e++)
      if (!covered[e]) all = false;
    if (all) best = k;
  }
  return best;
}

Eq1Report eq1_identity_check(const SetCoverInstance& sc, std::uint64_t node_budget) {
  Eq1Report rep;
  SetCoverGadget gadget = build_setcover_gadget(sc);
  rep.sc_opt = exhaustive_set_cover_opt(sc);
  ExactResult ex = exact_wmd(gadget.graph, gadget.weights, node_budget);
  if (!ex.solved) return rep;
  rep.checked = true;
  int m = (int)sc.sets.size();
  rep.predicted = Rational(rep.sc_opt) + Rational(m - rep.sc_opt, gadget.q);
  rep.actual = ex.best.weight.value;
  rep.holds = rep.actual == rep.predicted;
  return rep;
}

}  // namespace mixdom
