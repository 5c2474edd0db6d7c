#pragma once

#include <cstdint>
#include <optional>

#include "mixdom/domination.hpp"
#include "mixdom/graph.hpp"

namespace mixdom {

enum class Method { Exact, ApproxEdgeHeavy, ApproxAlg1, HeuristicNoGuarantee };

const char* method_name(Method m);

struct SolveResult {
  MixedSet solution;
  WeightedValue weight;
  Method method = Method::Exact;
  std::optional<int> guarantee;  // 1 for exact, 2 for the approximations
};

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

// Branch-and-bound outcome. When the node budget runs out, solved is false
// and best holds the incumbent, which is still a valid mixed dominating set
// but carries no optimality claim.
struct ExactResult {
  bool solved = false;
  SolveResult best;
  std::uint64_t nodes = 0;
};

// Minimum-weight mixed dominating set. Branches on the undominated element
// with the fewest remaining dominators; deterministic for a fixed input.
// Degenerate weights short-circuit: w_v = 0 takes every vertex, w_e = 0 takes
// every edge plus the isolated vertices.
ExactResult exact_wmd(const Graph& g, const WeightConfig& w,
                      std::uint64_t node_budget = kDefaultNodeBudget);

struct VertexCoverResult {
  bool solved = false;
  std::vector<VertexId> cover;
  std::uint64_t nodes = 0;
};

// Minimum-cardinality vertex cover by branching on an uncovered edge.
VertexCoverResult exact_vertex_cover(const Graph& g,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

// Factor-2 approximation for w_e >= 2*w_v: the LP-based vertex cover taken as
// vertex elements. Requires a graph without isolated vertices.
SolveResult approx_edge_heavy(const Graph& g, const WeightConfig& w);

// Factor-2 approximation for w_v <= w_e < 2*w_v: V1 as vertex elements, a
// maximum matching of the graph induced by the half-valued vertices as edge
// elements, the unmatched half-valued vertices as vertex elements. Requires a
// graph without isolated vertices.
SolveResult approx_alg1(const Graph& g, const WeightConfig& w);

enum class SolveMode { Exact, Approx, Auto };

struct SolveOutcome {
  // False when an exact search ran and exhausted its node budget; the result
  // then holds the incumbent with no optimality or ratio claim.
  bool solved = true;
  SolveResult result;
  std::uint64_t nodes = 0;
};

// Front door. Strips isolated vertices, dispatches on mode and weight regime,
// then adds the isolated vertices back as vertex elements. Approx and auto
// coincide: EdgeHeavy goes to the cover approximation, VertexFavorableTight to
// the matching approximation, and EdgeFavorable runs exact within the budget,
// falling back to the incumbent, flagged HeuristicNoGuarantee, if it runs out.
SolveOutcome solve(const Graph& g, const WeightConfig& w, SolveMode mode,
                   std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace mixdom
