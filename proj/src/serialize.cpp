#include "mixdom/serialize.hpp"

namespace mixdom {

ordered_json solution_to_json(const MixedSet& d, const WeightConfig& w, const WeightedValue& val,
                              std::optional<Method> method, std::optional<int> guarantee) {
  ordered_json j;
  j["vertices"] = d.vertices;
  auto edges = ordered_json::array();
  for (const Edge& e : d.edges) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  j["wv"] = w.wv.str();
  j["we"] = w.we.str();
  j["weight"] = val.value.str();
  if (method) j["method"] = method_name(*method);
  if (guarantee) j["guarantee"] = *guarantee;
  return j;
}

SolutionDoc solution_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("solution json: not an object");
  SolutionDoc doc;
  std::vector<VertexId> vs;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw std::invalid_argument("solution json: vertices not an array");
    for (const auto& x : j["vertices"]) {
      if (!x.is_number_integer()) throw std::invalid_argument("solution json: vertex not an integer");
      vs.push_back(x.get<int>());
    }
  }
  std::vector<Edge> es;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw std::invalid_argument("solution json: edges not an array");
    for (const auto& pair : j["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer())
        throw std::invalid_argument("solution json: edge must be [u, v]");
      es.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  doc.set = MixedSet::of(std::move(vs), std::move(es));
  if (j.contains("wv")) doc.wv = Rational::parse(j["wv"].get<std::string>());
  if (j.contains("we")) doc.we = Rational::parse(j["we"].get<std::string>());
  return doc;
}

ordered_json partition_to_json(const LpPartition& p, const Rational& objective) {
  ordered_json j;
  j["V1"] = p.v1;
  j["Vhalf"] = p.vhalf;
  j["V0"] = p.v0;
  j["objective"] = objective.str();
  return j;
}

ordered_json gi_labels_json(const GiGadget& g) {
  ordered_json j;
  j["kind"] = "gi";
  j["i"] = g.i;
  j["n_original"] = g.n_original;
  j["original"] = [&] {
    std::vector<int> v(g.n_original);
    for (int k = 0; k < g.n_original; k++) v[k] = k;
    return v;
  }();
  j["a"] = g.a_ids;
  j["b"] = g.b_ids;
  j["hub"] = g.hub;
  j["leaves"] = g.leaf_ids;
  return j;
}

ordered_json setcover_labels_json(const SetCoverGadget& g) {
  ordered_json j;
  j["kind"] = "setcover";
  j["q"] = g.q;
  j["layers"] = g.layers;
  j["n_elements"] = g.n_elements;
  j["num_sets"] = g.num_sets;
  j["wv"] = g.weights.wv.str();
  j["we"] = g.weights.we.str();
  std::vector<int> sets(g.num_sets);
  for (int k = 0; k < g.num_sets; k++) sets[k] = k;
  j["set_vertices"] = sets;
  // element copy (elem, layer), both 1-based, has id
  // num_sets + (layer - 1) * n_elements + (elem - 1)
  j["element_copy_base"] = g.num_sets;
  return j;
}

}  // namespace mixdom
