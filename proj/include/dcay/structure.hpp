#pragma once

// Predicted decompositions of Cay(D_2n, S) for each shape of S, and the
// executable checks that confirm them against the constructed graph.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcay/connset.hpp"
#include "dcay/graph.hpp"

namespace dcay {

enum class SpecialGraph { None, CompleteBipartite, Crown };
std::string special_graph_name(SpecialGraph s);

/// Rotation-only S: 2d components, each Circ(n', T').
struct DisjointCirculants {
  int d = 0;
  int n_prime = 0;
  std::vector<int> reduced_T;
  int count = 0;
};

/// Reflection-only S: the union of the k perfect matchings M_a, a in A.
struct MatchingDecomposition {
  std::vector<int> A;
  int k = 0;
  bool bipartite = true;
  SpecialGraph special = SpecialGraph::None;
};

/// Two rotations (plus r^{n/2} when present) and one or two reflections:
/// both layers are Circ(n, T) and the reflections add the matchings M_b.
struct TwoLayersPlusMatchings {
  std::vector<int> T;
  std::vector<int> matchings;
};

/// r^{n/2} and three reflections: N_R and N_F inside the layers plus
/// M_{a1}, M_{a2}, M_{a3}.
struct LayersWithAntipode {
  std::vector<int> T;
  std::vector<int> matchings;
};

using StructurePrediction =
    std::variant<DisjointCirculants, MatchingDecomposition, TwoLayersPlusMatchings, LayersWithAntipode>;

struct StructureCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // certificate or failure witness
};

struct StructureReport {
  int n = 0;
  CaseKind kind = CaseKind::I;
  std::string connection_set;
  StructurePrediction prediction;

  // filled in by verify_structure
  int components = 0;
  std::string component_iso;                        // "Circ(5;[1,2])" for rotation sets
  std::optional<std::string> component_name;        // "K_5" when recognised
  std::vector<std::vector<int>> component_bijections;  // component vertex i -> circulant vertex
  std::vector<StructureCheck> checks;
  bool verified = false;

  std::string label() const { return case_label(kind, size); }
  int size = 0;
};

/// Prediction only; checks are empty and verified is false.
StructureReport predict_structure(const ConnectionSet& cs);
/// Runs every check the prediction implies against g. Failures are data.
StructureReport verify_structure(StructureReport rep, const Graph& g);
/// predict_structure + verify_structure on cayley(cs).
StructureReport analyze(const ConnectionSet& cs);

/// "4 components ≅ K_5", "crown(5), 4 perfect matchings", ...
std::string summarize(const StructureReport& rep);

/// "Circ(6;[1,3])": representatives t <= n/2.
std::string circulant_name(int n, const std::vector<int>& T);

}  // namespace dcay
