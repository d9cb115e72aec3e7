#pragma once

// Hypothesis-gated checkers. Each one evaluates the hypotheses of a stated
// result, computes the predicted quantities, observes the real ones by
// search, and returns a reproducible verdict with a witness on failure.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcay/aut_search.hpp"
#include "dcay/perm_group.hpp"
#include "json.hpp"

namespace dcay {

enum class Verdict { Verified, Inapplicable, Refuted, Inconclusive };
std::string verdict_name(Verdict v);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string value;
};

/// Statements that hold for every Cayley graph (or are forced by the
/// construction), checked regardless of the theorem's conclusion.
struct Assertion {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct Quantity {
  std::optional<BigInt> aut_order;
  std::optional<bool> normal;
  std::optional<std::string> stabilizer;
  std::optional<BigInt> component_aut_order;
};

struct TheoremReport {
  std::string theorem;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Hypothesis> hypotheses;
  std::vector<Assertion> assertions;
  Quantity predicted;
  Quantity observed;
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::ordered_json witness;  // null unless refuted
  std::vector<std::string> notes;
  /// Present whenever Aut of a dihedral Cayley graph was computed.
  std::optional<NormalityEvidence> normality;

  bool hypotheses_hold() const;
  bool assertions_hold() const;
};

struct Thm37Bound {
  int M = 0;
  int Q = 0;
};
/// reps = {1, t_1, ..., t_{k-1}} with t_i >= 2 and k >= 2.
Thm37Bound thm37_bound(const std::vector<int>& reps);

/// Aut(Circ(p, T)) against Z_p x| H with H = {u : uT = T}.
TheoremReport check_lemma_3_2(int p, const std::vector<int>& T, int cap = default_vertex_cap());

enum class WreathVariant {
  General,    // H is the full unit stabiliser of T
  TwoUnits,   // H = {1, -1}, p > Q
  Corollary,  // reps {1, 2}, p > 5
};
/// Cay(D_2p, r^{+-T}) against (Z_p x| H) wr C_2. `reps` are the positive
/// representatives of T.
TheoremReport check_wreath(int p, const std::vector<int>& reps, WreathVariant variant,
                           int cap = default_vertex_cap());

/// Reflection sets s r^a, a in A. `theorem` picks the report id ("4.6" or
/// "4.8"); both run the same computation.
TheoremReport check_lemma_4_6_thm_4_8(int n, const std::vector<int>& A, const std::string& theorem = "4.6",
                                      int cap = default_vertex_cap());

/// S = {r, r^-1, s, s r^k}.
TheoremReport check_thm_5_2(int n, int k, int cap = default_vertex_cap());

/// G transitive of prime degree p: 2-transitive, or |G| divides p(p - 1).
TheoremReport check_burnside_schur(const PermGroup& g, int p);

/// {u unit : uT = T}, ascending.
std::vector<int> unit_stabilizer(int n, const std::vector<int>& T);

/// The translation group x -> x + 1 on Z_n.
PermGroup cyclic_translations(int n);

}  // namespace dcay
