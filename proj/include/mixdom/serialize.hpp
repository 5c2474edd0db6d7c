#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mixdom/domination.hpp"
#include "mixdom/lpvc.hpp"
#include "mixdom/reductions.hpp"
#include "mixdom/solvers.hpp"

namespace mixdom {

using ordered_json = nlohmann::ordered_json;

// {"vertices": [...], "edges": [[u, v], ...], "wv": "p/q", "we": "p/q",
//  "weight": "p/q"} plus "method"/"guarantee" when given. Rationals travel as
// strings so nothing is ever rounded.
ordered_json solution_to_json(const MixedSet& d, const WeightConfig& w, const WeightedValue& val,
                              std::optional<Method> method = std::nullopt,
                              std::optional<int> guarantee = std::nullopt);

struct SolutionDoc {
  MixedSet set;
  std::optional<Rational> wv, we;
};

// Reads back any solution_to_json output; extra keys are ignored.
SolutionDoc solution_from_json(const nlohmann::json& j);

ordered_json partition_to_json(const LpPartition& p, const Rational& objective);

ordered_json gi_labels_json(const GiGadget& g);
ordered_json setcover_labels_json(const SetCoverGadget& g);

}  // namespace mixdom
