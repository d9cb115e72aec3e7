#include "dcay/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dcay/error.hpp"

namespace dcay {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

void add_check(StructureReport& rep, std::string name, bool ok, std::string detail = {}) {
  rep.checks.push_back({std::move(name), ok, std::move(detail)});
}

// Circulant edges on the block of vertices offset .. offset+n-1.
std::vector<Edge> layer_edges(int n, const std::vector<int>& T, int offset) {
  std::vector<Edge> out;
  if (T.empty()) return out;
  const Graph c = circulant(n, T);
  for (const auto& [u, v] : c.edges()) out.push_back(make_edge(offset + u, offset + v));
  return out;
}

void check_partition(StructureReport& rep, const Graph& g, const std::vector<std::vector<Edge>>& parts,
                     const std::vector<std::string>& part_names) {
  const auto pc = edge_partition_check(g, parts);
  std::string detail = pc.describe();
  if (!pc.ok && pc.part >= 0 && pc.part < static_cast<int>(part_names.size())) {
    detail += " (" + part_names[pc.part] + ")";
  }
  add_check(rep, "edge partition", pc.ok, detail);
}

void check_matchings_perfect(StructureReport& rep, int n, const std::vector<int>& exps) {
  for (int a : exps) {
    const Matching m = matching_of_reflection(n, a);
    add_check(rep, "M_" + std::to_string(a) + " perfect", m.is_perfect(2 * n));
  }
}

// Edges between r^i and s r^j.
std::size_t inter_layer_count(const Graph& g, int n) {
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) count += (u < n) != (v < n) ? 1 : 0;
  return count;
}

void verify_rotations(StructureReport& rep, const DisjointCirculants& pred, const Graph& g) {
  const int n = rep.n;
  const auto comps = components(g);
  rep.components = static_cast<int>(comps.size());
  add_check(rep, "component count", rep.components == pred.count,
            "observed " + std::to_string(rep.components) + ", predicted " + std::to_string(pred.count));
  const std::size_t crossing = inter_layer_count(g, n);
  add_check(rep, "no inter-layer edges", crossing == 0, std::to_string(crossing) + " crossing edges");

  const Graph target = circulant(pred.n_prime, pred.reduced_T);
  rep.component_iso = circulant_name(pred.n_prime, pred.reduced_T);
  rep.component_name = recognise(target);
  const int cap = std::max(128, 2 * pred.n_prime);
  bool all_iso = true;
  std::string failure;
  for (const auto& comp : comps) {
    const Graph h = g.induced(comp);
    const auto iso = isomorphic(h, target, std::max(cap, h.order() + target.order()));
    if (!iso) {
      all_iso = false;
      if (failure.empty()) failure = "component containing vertex " + std::to_string(comp.front());
      rep.component_bijections.emplace_back();
      continue;
    }
    rep.component_bijections.push_back(*iso);
  }
  add_check(rep, "components isomorphic to " + rep.component_iso, all_iso,
            all_iso ? "explicit bijection per component" : failure);
}

void verify_reflections(StructureReport& rep, const MatchingDecomposition& pred, const Graph& g) {
  const int n = rep.n;
  rep.components = static_cast<int>(components(g).size());
  std::vector<std::vector<Edge>> parts;
  std::vector<std::string> names;
  for (int a : pred.A) {
    parts.push_back(matching_of_reflection(n, a).edges);
    names.push_back("M_" + std::to_string(a));
  }
  check_partition(rep, g, parts, names);
  check_matchings_perfect(rep, n, pred.A);

  std::optional<Edge> same_layer;
  for (const auto& e : g.edges()) {
    if ((e.first < n) == (e.second < n)) {
      same_layer = e;
      break;
    }
  }
  add_check(rep, "bipartite with parts R and F", !same_layer.has_value(),
            same_layer ? "edge " + edge_text(*same_layer) + " inside a layer" : "");

  std::optional<Edge> missing;
  for (int i = 0; i < n && !missing; ++i) {
    for (int j = n; j < 2 * n; ++j) {
      if (!g.has_edge(i, j)) {
        missing = Edge{i, j};
        break;
      }
    }
  }
  const bool complete_census = !missing && !same_layer;
  add_check(rep, "complete bipartite iff k = n", complete_census == (pred.k == n),
            missing ? "non-adjacent pair " + edge_text(*missing) : "every R-F pair adjacent");

  if (pred.special == SpecialGraph::CompleteBipartite) {
    const auto iso = isomorphic(g, complete_bipartite(n, n), std::max(128, 4 * n));
    add_check(rep, "isomorphic to K_{n,n}", iso.has_value());
  } else if (pred.special == SpecialGraph::Crown) {
    const auto iso = isomorphic(g, crown(n), std::max(128, 4 * n));
    add_check(rep, "isomorphic to crown(n)", iso.has_value());
  }
}

void verify_layers(StructureReport& rep, const std::vector<int>& T, const std::vector<int>& matchings,
                   const Graph& g) {
  const int n = rep.n;
  rep.components = static_cast<int>(components(g).size());
  std::vector<std::vector<Edge>> parts{layer_edges(n, T, 0), layer_edges(n, T, n)};
  std::vector<std::string> names{"R layer", "F layer"};
  for (int b : matchings) {
    parts.push_back(matching_of_reflection(n, b).edges);
    names.push_back("M_" + std::to_string(b));
  }
  check_partition(rep, g, parts, names);
  check_matchings_perfect(rep, n, matchings);

  const std::size_t crossing = inter_layer_count(g, n);
  const std::size_t expected = static_cast<std::size_t>(n) * matchings.size();
  add_check(rep, "inter-layer edge count", crossing == expected,
            "observed " + std::to_string(crossing) + ", predicted " + std::to_string(expected));

  const Graph layer = circulant(n, T);
  std::vector<int> rot(n);
  std::vector<int> ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = i;
    ref[i] = n + i;
  }
  add_check(rep, "R layer equals " + circulant_name(n, T), g.induced(rot) == layer);
  add_check(rep, "F layer equals " + circulant_name(n, T), g.induced(ref) == layer);
}

}  // namespace

std::string special_graph_name(SpecialGraph s) {
  switch (s) {
    case SpecialGraph::None: return "none";
    case SpecialGraph::CompleteBipartite: return "complete_bipartite";
    case SpecialGraph::Crown: return "crown";
  }
  return "none";
}

std::string circulant_name(int n, const std::vector<int>& T) {
  std::set<int> reps;
  for (int t : T) reps.insert(std::min(mod(t, n), mod(-t, n)));
  return "Circ(" + std::to_string(n) + ";[" + join({reps.begin(), reps.end()}) + "])";
}

StructureReport predict_structure(const ConnectionSet& cs) {
  StructureReport rep;
  rep.n = cs.n();
  rep.kind = cs.kind();
  rep.size = cs.size();
  rep.connection_set = cs.to_string();
  const int n = cs.n();
  switch (cs.kind()) {
    case CaseKind::I:
    case CaseKind::RotationsOnly: {
      const auto& p = cs.params();
      rep.prediction = DisjointCirculants{p.d, p.n_prime, p.reduced_rotation_exps, 2 * p.d};
      break;
    }
    case CaseKind::II:
    case CaseKind::ReflectionsOnly: {
      MatchingDecomposition m{cs.A(), cs.reflection_count(), true, SpecialGraph::None};
      if (m.k == n) m.special = SpecialGraph::CompleteBipartite;
      if (m.k == n - 1 && n >= 3) m.special = SpecialGraph::Crown;
      rep.prediction = m;
      break;
    }
    case CaseKind::III:
    case CaseKind::IV:
      rep.prediction = TwoLayersPlusMatchings{cs.T(), cs.A()};
      break;
    case CaseKind::V:
      rep.prediction = LayersWithAntipode{cs.T(), cs.A()};
      break;
  }
  return rep;
}

StructureReport verify_structure(StructureReport rep, const Graph& g) {
  if (g.order() != 2 * rep.n) {
    throw Error(ErrorCode::DegreeMismatch, "graph order is not 2n for this report");
  }
  rep.checks.clear();
  rep.component_bijections.clear();
  std::visit(
      [&](const auto& pred) {
        using P = std::decay_t<decltype(pred)>;
        if constexpr (std::is_same_v<P, DisjointCirculants>) {
          verify_rotations(rep, pred, g);
        } else if constexpr (std::is_same_v<P, MatchingDecomposition>) {
          verify_reflections(rep, pred, g);
        } else {
          verify_layers(rep, pred.T, pred.matchings, g);
        }
      },
      rep.prediction);
  rep.verified = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const StructureCheck& c) { return c.ok; });
  return rep;
}

StructureReport analyze(const ConnectionSet& cs) {
  return verify_structure(predict_structure(cs), cayley(cs));
}

std::string summarize(const StructureReport& rep) {
  std::ostringstream out;
  std::visit(
      [&](const auto& pred) {
        using P = std::decay_t<decltype(pred)>;
        if constexpr (std::is_same_v<P, DisjointCirculants>) {
          out << rep.components << " components ≅ "
              << rep.component_name.value_or(rep.component_iso);
          if (rep.component_name) out << " = " << rep.component_iso;
        } else if constexpr (std::is_same_v<P, MatchingDecomposition>) {
          if (pred.special == SpecialGraph::CompleteBipartite) {
            out << "K_{" << rep.n << "," << rep.n << "}, ";
          } else if (pred.special == SpecialGraph::Crown) {
            out << "crown(" << rep.n << "), ";
          }
          out << pred.k << " perfect matchings M_a, a in [" << join(pred.A) << "], bipartite R|F";
        } else if constexpr (std::is_same_v<P, TwoLayersPlusMatchings>) {
          out << "two layers " << circulant_name(rep.n, pred.T) << " + matchings M_b, b in ["
              << join(pred.matchings) << "]";
        } else {
          out << "layers N_R, N_F + matchings M_a, a in [" << join(pred.matchings) << "]";
        }
      },
      rep.prediction);
  out << (rep.verified ? " (verified)" : " (NOT verified)");
  return out.str();
}

}  // namespace dcay
