#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "mixdom/graph.hpp"
#include "mixdom/rational.hpp"

namespace mixdom {

// Weight regimes for the (w_v, w_e) pair. Boundaries: w_e == 2*w_v counts as
// EdgeHeavy, w_e == w_v as VertexFavorableTight.
enum class Regime { EdgeHeavy, VertexFavorableTight, EdgeFavorable };

const char* regime_name(Regime r);

struct WeightConfig {
  Rational wv;
  Rational we;

  WeightConfig(Rational wv_, Rational we_) : wv(wv_), we(we_) {
    if (wv.is_negative() || we.is_negative())
      throw std::invalid_argument("weights must be nonnegative");
  }

  Regime regime() const {
    if (we >= Rational(2) * wv) return Regime::EdgeHeavy;
    if (wv <= we) return Regime::VertexFavorableTight;
    return Regime::EdgeFavorable;
  }
};

// A set of vertex elements plus edge elements, kept sorted and unique.
struct MixedSet {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;

  static MixedSet of(std::vector<VertexId> vs, std::vector<Edge> es);
  bool empty() const { return vertices.empty() && edges.empty(); }
  int size() const { return (int)vertices.size() + (int)edges.size(); }

  friend bool operator==(const MixedSet&, const MixedSet&) = default;
};

struct WeightedValue {
  Rational value;
  int vertex_count = 0;
  int edge_count = 0;
};

using Witness = std::variant<VertexId, Edge>;

struct DominationCheck {
  bool dominating = false;
  // First undominated edge in canonical order, else first undominated vertex.
  std::optional<Witness> witness;
};

// A mixed set d dominates g when every vertex outside d.vertices is an
// endpoint of an edge in d.edges or adjacent to a vertex in d.vertices, and
// every edge outside d.edges has an endpoint that is in d.vertices or covered
// by some edge of d.edges. Elements of d referencing vertices or edges not in
// g raise std::invalid_argument.
DominationCheck check_mixed_domination(const Graph& g, const MixedSet& d);
bool is_mixed_dominating_set(const Graph& g, const MixedSet& d);

WeightedValue weight(const MixedSet& d, const WeightConfig& w);

// d.vertices together with all endpoints of d.edges, sorted unique.
std::vector<VertexId> closure_vertices(const MixedSet& d);

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover);

}  // namespace mixdom
