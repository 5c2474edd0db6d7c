#include "mixdom/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace mixdom {

bool is_valid_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.num_vertices(), 0);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

Matching greedy_maximal_matching(const Graph& g) {
  std::vector<char> used(g.num_vertices(), 0);
  Matching m;
  for (const Edge& e : g.edges()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    m.edges.push_back(e);
  }
  return m;
}

namespace {

struct Sides {
  std::vector<int> side;   // 0 left, 1 right
  std::vector<int> index;  // position within its side list
};

Sides check_bipartition(const Graph& g, const std::vector<VertexId>& left,
                        const std::vector<VertexId>& right) {
  Sides s;
  s.side.assign(g.num_vertices(), -1);
  s.index.assign(g.num_vertices(), -1);
  for (int i = 0; i < (int)left.size(); i++) {
    VertexId v = left[i];
    if (!g.has_vertex(v) || s.side[v] != -1) throw std::invalid_argument("bad bipartition: left side");
    s.side[v] = 0;
    s.index[v] = i;
  }
  for (int i = 0; i < (int)right.size(); i++) {
    VertexId v = right[i];
    if (!g.has_vertex(v) || s.side[v] != -1) throw std::invalid_argument("bad bipartition: right side");
    s.side[v] = 1;
    s.index[v] = i;
  }
  for (VertexId v = 0; v < g.num_vertices(); v++)
    if (s.side[v] == -1) throw std::invalid_argument("bad bipartition: vertex uncovered");
  for (const Edge& e : g.edges())
    if (s.side[e.u] == s.side[e.v])
      throw std::invalid_argument("bad bipartition: edge inside one side");
  return s;
}

struct HK {
  int nl, nr;
  std::vector<std::vector<int>> adj;  // left index -> right indices
  std::vector<int> ml, mr, dist;
  static constexpr int INF = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    dist.assign(nl, INF);
    for (int u = 0; u < nl; u++)
      if (ml[u] < 0) {
        dist[u] = 0;
        q.push(u);
      }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        int nu = mr[w];
        if (nu < 0) {
          found = true;
        } else if (dist[nu] == INF) {
          dist[nu] = dist[u] + 1;
          q.push(nu);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int w : adj[u]) {
      int nu = mr[w];
      if (nu < 0 || (dist[nu] == dist[u] + 1 && dfs(nu))) {
        ml[u] = w;
        mr[w] = u;
        return true;
      }
    }
    dist[u] = INF;
    return false;
  }

  void run() {
    ml.assign(nl, -1);
    mr.assign(nr, -1);
    while (bfs())
      for (int u = 0; u < nl; u++)
        if (ml[u] < 0) dfs(u);
  }
};

HK build_hk(const Graph& g, const std::vector<VertexId>& left, const Sides& s) {
  HK hk;
  hk.nl = (int)left.size();
  hk.nr = 0;
  for (VertexId v = 0; v < g.num_vertices(); v++)
    if (s.side[v] == 1) hk.nr++;
  hk.adj.assign(hk.nl, {});
  for (int i = 0; i < hk.nl; i++)
    for (VertexId y : g.neighbors(left[i])) hk.adj[i].push_back(s.index[y]);
  return hk;
}

}  // namespace

Matching maximum_matching_bipartite(const Graph& g, const std::vector<VertexId>& left,
                                    const std::vector<VertexId>& right) {
  Sides s = check_bipartition(g, left, right);
  HK hk = build_hk(g, left, s);
  hk.run();
  Matching m;
  for (int i = 0; i < hk.nl; i++)
    if (hk.ml[i] >= 0) m.edges.emplace_back(left[i], right[hk.ml[i]]);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::vector<VertexId> koenig_min_vertex_cover(const Graph& g, const std::vector<VertexId>& left,
                                              const std::vector<VertexId>& right,
                                              const Matching& mm) {
  Sides s = check_bipartition(g, left, right);
  if (!is_valid_matching(g, mm)) throw std::invalid_argument("koenig: not a matching of g");
  std::vector<int> ml(left.size(), -1), mr(right.size(), -1);
  for (const Edge& e : mm.edges) {
    VertexId l = s.side[e.u] == 0 ? e.u : e.v;
    VertexId r = s.side[e.u] == 0 ? e.v : e.u;
    ml[s.index[l]] = s.index[r];
    mr[s.index[r]] = s.index[l];
  }
  // Alternate from unmatched left vertices: non-matching edges forward,
  // matching edges back.
  std::vector<char> visl(left.size(), 0), visr(right.size(), 0);
  std::queue<int> q;
  for (int i = 0; i < (int)left.size(); i++)
    if (ml[i] < 0) {
      visl[i] = 1;
      q.push(i);
    }
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (VertexId y : g.neighbors(left[i])) {
      int j = s.index[y];
      if (ml[i] == j || visr[j]) continue;
      visr[j] = 1;
      int back = mr[j];
      if (back >= 0 && !visl[back]) {
        visl[back] = 1;
        q.push(back);
      }
    }
  }
  std::vector<VertexId> cover;
  for (int i = 0; i < (int)left.size(); i++)
    if (!visl[i]) cover.push_back(left[i]);
  for (int j = 0; j < (int)right.size(); j++)
    if (visr[j]) cover.push_back(right[j]);
  std::sort(cover.begin(), cover.end());
  if ((int)cover.size() != mm.size())
    throw std::logic_error("koenig: cover size " + std::to_string(cover.size()) +
                           " != matching size " + std::to_string(mm.size()));
  for (const Edge& e : g.edges())
    if (!std::binary_search(cover.begin(), cover.end(), e.u) &&
        !std::binary_search(cover.begin(), cover.end(), e.v))
      throw std::logic_error("koenig: extracted set is not a cover");
  return cover;
}

// Edmonds blossom search, O(V^3). Standard base/parent contraction scheme;
// vertices are scanned in ascending id so results are deterministic.
namespace {

struct Blossom {
  int n;
  const Graph& g;
  std::vector<int> match, par, base;
  std::vector<char> used, flower;
  std::vector<int> q;

  explicit Blossom(const Graph& gg) : n(gg.num_vertices()), g(gg) {
    match.assign(n, -1);
  }

  int lca(int a, int b) {
    std::vector<char> mark(n, 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (match[a] < 0) break;
      a = par[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = par[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      flower[base[v]] = 1;
      flower[base[match[v]]] = 1;
      par[v] = child;
      child = match[v];
      v = par[match[v]];
    }
  }

  bool find_path(int root) {
    used.assign(n, 0);
    par.assign(n, -1);
    base.resize(n);
    for (int i = 0; i < n; i++) base[i] = i;
    used[root] = 1;
    q.clear();
    q.push_back(root);
    for (size_t qi = 0; qi < q.size(); qi++) {
      int v = q[qi];
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && par[match[to]] >= 0)) {
          int curbase = lca(v, to);
          flower.assign(n, 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; i++)
            if (flower[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push_back(i);
              }
            }
        } else if (par[to] < 0) {
          par[to] = v;
          if (match[to] < 0) {
            // augment along the alternating path ending at `to`
            int u = to;
            while (u >= 0) {
              int pv = par[u], ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match[to]] = 1;
          q.push_back(match[to]);
        }
      }
    }
    return false;
  }

  void run() {
    for (int v = 0; v < n; v++)
      if (match[v] < 0) find_path(v);
  }
};

}  // namespace

Matching maximum_matching_general(const Graph& g) {
  Blossom b(g);
  b.run();
  Matching m;
  for (int v = 0; v < b.n; v++)
    if (b.match[v] > v) m.edges.emplace_back(v, b.match[v]);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace mixdom
