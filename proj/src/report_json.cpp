#include "dcay/report_json.hpp"

namespace dcay {

namespace {

ordered_json quantity(const Quantity& q) {
  ordered_json j = ordered_json::object();
  if (q.aut_order) j["aut_order"] = q.aut_order->str();
  if (q.component_aut_order) j["component_aut_order"] = q.component_aut_order->str();
  if (q.normal) j["normal"] = *q.normal;
  if (q.stabilizer) j["stabilizer"] = *q.stabilizer;
  return j;
}

}  // namespace

ordered_json to_json(const Permutation& p) { return p.images(); }

ordered_json to_json(const PermGroup& g) {
  ordered_json gens = ordered_json::array();
  for (const auto& x : g.generators()) gens.push_back(to_json(x));
  return {{"degree", g.degree()},
          {"order", g.order().str()},
          {"base", g.base()},
          {"orbit_sizes", g.fundamental_orbit_sizes()},
          {"generators", gens}};
}

ordered_json to_json(const ConnectionSet& cs) {
  ordered_json elems = ordered_json::array();
  for (const auto& x : cs.elements()) elems.push_back(x.to_string());
  const auto& p = cs.params();
  ordered_json j{{"n", cs.n()},     {"S", elems},     {"case", cs.label()},
                 {"T", p.rotation_exps}, {"A", p.reflection_exps}, {"delta", p.delta},
                 {"d", p.d},        {"n_prime", p.n_prime}};
  if (!p.reduced_rotation_exps.empty()) j["T_prime"] = p.reduced_rotation_exps;
  return j;
}

ordered_json to_json(const NormalityEvidence& ev) {
  ordered_json j{{"normal", ev.normal}};
  if (ev.witness) {
    j["witness"] = {{"conjugated", to_json(*ev.witness)},
                    {"conjugator", to_json(*ev.conjugator)},
                    {"translation", to_json(*ev.conjugated)},
                    {"not_in_RG", true}};
  }
  j["aut_order"] = ev.aut_order.str();
  j["stabilizer_order"] = ev.stabilizer_order.str();
  j["aut_gs_size"] = ev.aut_gs_size;
  j["stabilizer_equals_aut_gs"] = ev.stabilizer_equals_aut_gs;
  j["consistent"] = ev.consistent;
  return j;
}

ordered_json to_json(const StructureReport& rep) {
  ordered_json j{{"case", rep.label()}, {"n", rep.n}, {"S", rep.connection_set}};
  std::visit(
      [&](const auto& pred) {
        using P = std::decay_t<decltype(pred)>;
        if constexpr (std::is_same_v<P, DisjointCirculants>) {
          j["prediction"] = "disjoint_circulants";
          j["d"] = pred.d;
          j["n_prime"] = pred.n_prime;
          j["T_prime"] = pred.reduced_T;
          j["predicted_components"] = pred.count;
        } else if constexpr (std::is_same_v<P, MatchingDecomposition>) {
          j["prediction"] = "matching_decomposition";
          j["A"] = pred.A;
          j["k"] = pred.k;
          j["bipartite"] = pred.bipartite;
          j["special"] = special_graph_name(pred.special);
        } else if constexpr (std::is_same_v<P, TwoLayersPlusMatchings>) {
          j["prediction"] = "two_layers_plus_matchings";
          j["T"] = pred.T;
          j["matchings"] = pred.matchings;
        } else {
          j["prediction"] = "layers_with_antipode";
          j["T"] = pred.T;
          j["matchings"] = pred.matchings;
        }
      },
      rep.prediction);
  j["components"] = rep.components;
  if (!rep.component_iso.empty()) j["component_iso"] = rep.component_iso;
  if (rep.component_name) j["component_name"] = *rep.component_name;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = checks;
  j["verified"] = rep.verified;
  return j;
}

ordered_json to_json(const TheoremReport& rep) {
  ordered_json hyps = ordered_json::array();
  for (const auto& h : rep.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"value", h.value}});
  ordered_json asserts = ordered_json::array();
  for (const auto& a : rep.assertions) {
    asserts.push_back({{"name", a.name}, {"holds", a.holds}, {"detail", a.detail}});
  }
  ordered_json j{{"theorem", rep.theorem},          {"params", rep.params},
                 {"hypotheses", hyps},              {"assertions", asserts},
                 {"predicted", quantity(rep.predicted)}, {"observed", quantity(rep.observed)},
                 {"verdict", verdict_name(rep.verdict)}};
  j["witness"] = rep.witness;
  if (rep.normality) j["normality"] = to_json(*rep.normality);
  j["notes"] = rep.notes;
  return j;
}

}  // namespace dcay
