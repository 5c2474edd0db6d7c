#include "mixdom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mixdom {

Graph Graph::build(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
    g.edges_.emplace_back(a, b);  // rejects self-loops
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.adj_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& lst : g.adj_) std::sort(lst.begin(), lst.end());
  return g;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (!has_vertex(v)) throw std::out_of_range("vertex id " + std::to_string(v));
  return adj_[v];
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  const auto& lst = adj_[a];
  return std::binary_search(lst.begin(), lst.end(), b);
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return (int)(it - edges_.begin());
}

std::vector<VertexId> Graph::isolated_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; v++)
    if (adj_[v].empty()) out.push_back(v);
  return out;
}

InducedSubgraph Graph::induced_subgraph(const std::vector<VertexId>& keep) const {
  std::vector<VertexId> ids = keep;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("duplicate vertex in induced_subgraph");
  std::vector<int> to_new(n_, -1);
  for (int i = 0; i < (int)ids.size(); i++) {
    if (!has_vertex(ids[i])) throw std::invalid_argument("induced_subgraph vertex out of range");
    to_new[ids[i]] = i;
  }
  std::vector<std::pair<VertexId, VertexId>> sub_edges;
  for (const Edge& e : edges_)
    if (to_new[e.u] >= 0 && to_new[e.v] >= 0) sub_edges.emplace_back(to_new[e.u], to_new[e.v]);
  return InducedSubgraph{build((int)ids.size(), sub_edges), std::move(ids)};
}

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (std::getline(in, line)) {
    lineno++;
    if (blank(line) || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (n < 0) {
      if (tag != "p") throw ParseError(lineno, "expected 'p <n> <m>' header, got '" + tag + "'");
      if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "malformed header");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
      continue;
    }
    if (tag != "e") throw ParseError(lineno, "expected 'e <u> <v>', got '" + tag + "'");
    if ((long long)edges.size() >= m) throw ParseError(lineno, "more edge lines than header m");
    long long u, v;
    if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
    std::string rest;
    if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "edge endpoint out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    edges.emplace_back((VertexId)u, (VertexId)v);
  }
  if (n < 0) throw ParseError(lineno, "missing 'p' header");
  if ((long long)edges.size() != m)
    throw ParseError(lineno + 1, "header promises " + std::to_string(m) + " edges, file has " +
                                     std::to_string(edges.size()));
  return Graph::build((int)n, edges);
}

Graph read_graph_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

}  // namespace mixdom
