#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixdom {

using VertexId = int;

// Undirected edge with endpoints normalized so u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("self-loop edge (" + std::to_string(a) + ")");
    u = a < b ? a : b;
    v = a < b ? b : a;
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct InducedSubgraph;

// Immutable simple graph over dense vertex ids [0, n). The edge list and all
// adjacency lists are kept sorted, so every traversal in the toolkit has a
// fixed deterministic order.
class Graph {
 public:
  Graph() = default;

  // Deduplicates parallel edges; rejects self-loops and out-of-range ids.
  static Graph build(int n, const std::vector<std::pair<VertexId, VertexId>>& edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return (int)edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const { return (int)neighbors(v).size(); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  // Position of e in edges(), or -1 when absent.
  int edge_index(const Edge& e) const;

  std::vector<VertexId> isolated_vertices() const;

  // Subgraph induced by `keep` (any order, duplicates rejected). Vertices are
  // renumbered by ascending original id; id_map translates back.
  InducedSubgraph induced_subgraph(const std::vector<VertexId>& keep) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> id_map;  // new id -> original id
};

// Thrown by the text readers with the offending 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Text format: a "p <n> <m>" header followed by exactly m "e <u> <v>" lines
// (0-based endpoints); lines starting with "c" are comments and may appear
// anywhere. write_graph emits the canonical form that read_graph round-trips.
Graph read_graph(std::istream& in);
Graph read_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
std::string write_graph_text(const Graph& g);

}  // namespace mixdom
