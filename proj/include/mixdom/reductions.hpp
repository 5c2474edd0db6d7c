#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mixdom/domination.hpp"
#include "mixdom/graph.hpp"
#include "mixdom/solvers.hpp"

namespace mixdom {

// Augmented graph G_i: the original vertices keep ids 0..n-1, followed by the
// pendant pairs a_1..a_i and b_1..b_i, a hub c0 adjacent to every other
// vertex, and 2n leaves hanging off c0. Each a_j is adjacent to b_j and to
// every original vertex.
struct GiGadget {
  Graph graph;
  int i = 0;
  int n_original = 0;
  std::vector<VertexId> a_ids, b_ids;
  VertexId hub = -1;
  std::vector<VertexId> leaf_ids;
};

// Requires 1 <= i <= n and a graph without isolated vertices.
GiGadget build_gi(const Graph& g, int i);

struct GiIdentityReport {
  bool checked = false;  // false when a budget ran out
  bool holds = false;
  int tau = -1;  // minimum vertex cover size of the base graph
  Rational expected;
  Rational actual;
};

// Computes tau, builds G_tau and tests whether its minimum mixed domination
// weight equals w_v + tau * w_e. Requires w_v <= w_e < 2*w_v.
GiIdentityReport gi_optimum_identity_check(const Graph& g, const WeightConfig& w,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

// Closure vertices of a valid mixed dominating set form a vertex cover.
std::vector<VertexId> vc_from_wmd(const Graph& g, const MixedSet& d);

// Set cover instance over the universe {1..n}; every element must appear in
// at least one subset.
struct SetCoverInstance {
  int n_elements = 0;
  std::vector<std::vector<int>> sets;  // sorted, unique, 1-based elements

  static SetCoverInstance make(int n, std::vector<std::vector<int>> sets);
};

// Text format: "u <n> <m>" header, then m lines "s <e1> <e2> ...". Comments
// start with "c".
SetCoverInstance read_setcover(std::istream& in);
SetCoverInstance read_setcover_file(const std::string& path);

// Bipartite gadget: one vertex per subset, q^2 + 1 copies of every element,
// each copy adjacent to the vertices of the subsets containing its element.
// Weights are (1, 1/q) with q = floor(m * ln n) unless overridden.
struct SetCoverGadget {
  Graph graph;
  int q = 0;
  int layers = 0;  // q^2 + 1
  int n_elements = 0;
  int num_sets = 0;
  WeightConfig weights{Rational(1), Rational(1)};

  VertexId set_vertex(int j) const { return j; }
  VertexId element_copy(int elem, int layer) const {  // elem, layer both 1-based
    return num_sets + (layer - 1) * n_elements + (elem - 1);
  }
};

// Throws std::invalid_argument when q would be 0 (instance too small) or when
// m * ln n sits within 1e-9 of an integer, in which case pass q explicitly.
SetCoverGadget build_setcover_gadget(const SetCoverInstance& sc,
                                     std::optional<int> q_override = std::nullopt);

struct ScExtraction {
  std::vector<int> chosen_sets;  // indices into sc.sets
  bool covers = false;           // chosen sets cover the whole universe
};

// Reads the chosen subsets off a valid mixed dominating set of the gadget.
// The extraction runs on any valid d; covers is false when d was too weak to
// induce a cover.
ScExtraction sc_from_mds(const SetCoverInstance& sc, const SetCoverGadget& gadget,
                         const MixedSet& d);

// Exhaustive minimum set cover size, for instances with at most 20 subsets.
int exhaustive_set_cover_opt(const SetCoverInstance& sc);

struct Eq1Report {
  bool checked = false;
  bool holds = false;
  int sc_opt = -1;
  Rational predicted;  // sc_opt + (m - sc_opt) / q
  Rational actual;
};

// Tests the gadget weight identity against the exhaustive set cover optimum.
Eq1Report eq1_identity_check(const SetCoverInstance& sc,
                             std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace mixdom
