#include "dcay/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dcay/connset.hpp"
#include "dcay/error.hpp"
#include "dcay/graph.hpp"

namespace dcay {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string str(const BigInt& x) { return x.str(); }

std::string set_text(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

void hyp(TheoremReport& r, std::string name, bool holds, std::string value = {}) {
  r.hypotheses.push_back({std::move(name), holds, std::move(value)});
}

void assert_that(TheoremReport& r, std::string name, bool holds, std::string detail = {}) {
  r.assertions.push_back({std::move(name), holds, std::move(detail)});
}

ordered_json perm_json(const Permutation& p) { return p.images(); }

std::vector<int> normalized(int n, const std::vector<int>& xs) {
  std::set<int> s;
  for (int x : xs) s.insert(mod(x, n));
  return {s.begin(), s.end()};
}

bool divides(const BigInt& a, const BigInt& b) { return a != 0 && b % a == 0; }

// Aut of a dihedral Cayley graph plus the statements true for every Cayley
// graph. Returns nullopt (and marks the report inconclusive) at the cap.
std::optional<PermGroup> observe_cayley(TheoremReport& r, const ConnectionSet& cs, int cap) {
  std::optional<PermGroup> aut;
  try {
    aut = automorphism_group(cayley(cs), cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCapExceeded) throw;
    r.notes.push_back(e.what());
    return std::nullopt;
  }
  const NormalityEvidence ev = cayley_normality(cs, *aut);
  const int n = cs.n();
  r.observed.aut_order = ev.aut_order;
  r.observed.normal = ev.normal;
  r.observed.stabilizer = "order " + str(ev.stabilizer_order);
  assert_that(r, "regular translations are automorphisms", ev.regular_in_aut);
  assert_that(r, "Aut(G,S) lies in the stabiliser of e", ev.aut_gs_in_stabilizer,
              "|Aut(G,S)| = " + std::to_string(ev.aut_gs_size));
  const BigInt lower = BigInt(2 * n) * ev.aut_gs_size;
  assert_that(r, "2n|Aut(G,S)| divides |Aut|", divides(lower, ev.aut_order),
              str(lower) + " | " + str(ev.aut_order));
  assert_that(r, "normal iff Aut_e = Aut(G,S)", ev.consistent,
              std::string("normal=") + (ev.normal ? "true" : "false") +
                  ", stabiliser equals Aut(G,S)=" + (ev.stabilizer_equals_aut_gs ? "true" : "false"));
  r.normality = ev;
  return aut;
}

ordered_json normality_witness(const NormalityEvidence& ev) {
  ordered_json w = ordered_json::object();
  if (ev.witness) {
    w["conjugated"] = perm_json(*ev.witness);
    w["conjugator"] = perm_json(*ev.conjugator);
    w["translation"] = perm_json(*ev.conjugated);
    w["not_in_RG"] = true;
  }
  return w;
}

// Inapplicable when a hypothesis fails, refuted when a guaranteed assertion
// or the predicted comparison fails, verified otherwise.
void decide(TheoremReport& r, bool prediction_matches, ordered_json mismatch_witness) {
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::Inapplicable;
    return;
  }
  for (const auto& a : r.assertions) {
    if (!a.holds) {
      r.verdict = Verdict::Refuted;
      r.witness = {{"kind", "assertion"}, {"assertion", a.name}, {"detail", a.detail}};
      return;
    }
  }
  if (prediction_matches) {
    r.verdict = Verdict::Verified;
  } else {
    r.verdict = Verdict::Refuted;
    r.witness = std::move(mismatch_witness);
  }
}

ordered_json order_witness(const Quantity& predicted, const Quantity& observed) {
  ordered_json w{{"kind", "order_mismatch"}};
  if (predicted.aut_order) w["predicted"] = str(*predicted.aut_order);
  if (observed.aut_order) w["observed"] = str(*observed.aut_order);
  return w;
}

void require_prime(int p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

ConnectionSet rotation_set(int n, const std::vector<int>& T) {
  std::vector<DihedralElement> elems;
  for (int t : T) elems.push_back(DihedralElement::rotation(t, n));
  return validate(n, elems);
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Inapplicable: return "inapplicable";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

bool TheoremReport::assertions_hold() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.holds; });
}

Thm37Bound thm37_bound(const std::vector<int>& reps) {
  const std::set<int> set(reps.begin(), reps.end());
  if (!set.contains(1)) throw Error(ErrorCode::InvalidArgument, "representatives must contain 1");
  if (set.size() < 2) throw Error(ErrorCode::InvalidArgument, "k >= 2 representatives required");
  if (*set.begin() < 1) throw Error(ErrorCode::InvalidArgument, "representatives must be positive");
  Thm37Bound b;
  b.M = *set.rbegin();
  for (int a : set) {
    for (int c : set) b.Q = std::max(b.Q, a * c + b.M);
  }
  return b;
}

std::vector<int> unit_stabilizer(int n, const std::vector<int>& T) {
  const auto base = normalized(n, T);
  std::vector<int> out;
  for (int u : units(n)) {
    std::vector<int> image;
    for (int t : base) image.push_back(static_cast<int>((static_cast<std::int64_t>(u) * t) % n));
    if (normalized(n, image) == base) out.push_back(u);
  }
  return out;
}

PermGroup cyclic_translations(int n) {
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(shift)});
}

TheoremReport check_lemma_3_2(int p, const std::vector<int>& T_in, int cap) {
  require_prime(p);
  TheoremReport r;
  r.theorem = "3.2";
  const auto T = normalized(p, T_in);
  r.params = {{"p", p}, {"T", T}};
  const Graph g = circulant(p, T);

  hyp(r, "p >= 3", p >= 3, std::to_string(p));
  hyp(r, "T generates Z_p", gcd_all(p, T) == 1, "gcd = " + std::to_string(gcd_all(p, T)));
  const auto H = unit_stabilizer(p, T);
  hyp(r, "H proper in Z_p^*", static_cast<int>(H.size()) < p - 1,
      "H = " + set_text(H) + ", |H| = " + std::to_string(H.size()));

  PermGroup aut = [&] {
    try {
      return automorphism_group(g, cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeCapExceeded) throw;
      r.notes.push_back(e.what());
      return PermGroup(0, {});
    }
  }();
  if (aut.degree() != p) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  const bool two_transitive = is_two_transitive(aut);
  hyp(r, "Aut not 2-transitive (observed)", !two_transitive,
      two_transitive ? "2-transitive" : "not 2-transitive");

  std::vector<Permutation> mults;
  for (int u : H) {
    std::vector<int> images(p);
    for (int x = 0; x < p; ++x) images[x] = static_cast<int>((static_cast<std::int64_t>(u) * x) % p);
    mults.emplace_back(std::move(images));
  }
  const bool h_in_aut = std::all_of(mults.begin(), mults.end(), [&](const Permutation& m) {
    return is_isomorphism(g, g, m.images());
  });
  assert_that(r, "x -> ux is an automorphism for u in H", h_in_aut);

  const auto normality = is_normal_in(cyclic_translations(p), aut);
  r.predicted.aut_order = BigInt(p) * H.size();
  r.predicted.normal = true;
  r.predicted.stabilizer = "H = " + set_text(H);
  r.observed.aut_order = aut.order();
  r.observed.normal = normality.normal;
  r.observed.stabilizer = "order " + str(aut.stabilizer(0).order());

  ordered_json w = order_witness(r.predicted, r.observed);
  if (!normality.normal) {
    w["conjugated"] = perm_json(*normality.witness);
    w["not_in_RZp"] = true;
  }
  decide(r, *r.predicted.aut_order == aut.order() && normality.normal, std::move(w));
  return r;
}

TheoremReport check_wreath(int p, const std::vector<int>& reps_in, WreathVariant variant, int cap) {
  TheoremReport r;
  std::vector<int> reps = variant == WreathVariant::Corollary ? std::vector<int>{1, 2} : reps_in;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  r.theorem = variant == WreathVariant::General ? "3.6" : variant == WreathVariant::TwoUnits ? "3.7" : "3.12";
  r.params = {{"p", p}, {"t", reps}};

  const bool prime = is_prime(p) && p >= 3;
  hyp(r, "p prime, p >= 3", prime, std::to_string(p));
  if (!prime) {
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  const auto T = symmetric_closure(p, reps);
  if (std::find(T.begin(), T.end(), 0) != T.end()) {
    hyp(r, "0 not in T", false, set_text(T));
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  r.params["T"] = T;

  std::vector<int> H;
  if (variant == WreathVariant::General) {
    H = unit_stabilizer(p, T);
    hyp(r, "H proper in Z_p^*", static_cast<int>(H.size()) < p - 1,
        "H = " + set_text(H));
    hyp(r, "gcd(p, T) = 1", gcd_all(p, T) == 1);
  } else {
    H = {1, p - 1};
    if (variant == WreathVariant::Corollary) {
      hyp(r, "p > 5", p > 5, std::to_string(p));
    } else {
      std::string why;
      std::optional<Thm37Bound> bound;
      try {
        bound = thm37_bound(reps);
      } catch (const Error& e) {
        why = e.what();
      }
      hyp(r, "representatives {1, t_i >= 2}, k >= 2", bound.has_value(), why);
      if (bound) {
        r.params["M"] = bound->M;
        r.params["Q"] = bound->Q;
        hyp(r, "p > Q", p > bound->Q, std::to_string(p) + " vs Q = " + std::to_string(bound->Q));
      }
    }
    std::vector<int> neg;
    for (int t : T) neg.push_back(p - t);
    assert_that(r, "(+-1) T = T", normalized(p, neg) == T);
  }
  const auto scanned = unit_stabilizer(p, T);

  // component: Circ(p, T)
  const Graph circ = circulant(p, T);
  std::optional<PermGroup> comp_aut;
  try {
    comp_aut = automorphism_group(circ, cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCapExceeded) throw;
    r.notes.push_back(e.what());
  }
  if (comp_aut && variant == WreathVariant::General) {
    const bool two_transitive = is_two_transitive(*comp_aut);
    hyp(r, "Aut(Circ(p,T)) not 2-transitive (observed)", !two_transitive);
  }

  const ConnectionSet cs = rotation_set(p, T);
  const auto aut = observe_cayley(r, cs, cap);
  if (!aut || !comp_aut) {
    r.verdict = r.hypotheses_hold() ? Verdict::Inconclusive : Verdict::Inapplicable;
    return r;
  }
  const BigInt comp_pred = BigInt(p) * H.size();
  r.predicted.aut_order = comp_pred * comp_pred * 2;
  r.predicted.component_aut_order = comp_pred;
  r.predicted.stabilizer = "H = " + set_text(H);
  r.observed.component_aut_order = comp_aut->order();
  r.observed.stabilizer = *r.observed.stabilizer + ", unit stabiliser of T = " + set_text(scanned);

  const auto comps = components(cayley(cs));
  assert_that(r, "two components", comps.size() == 2, std::to_string(comps.size()) + " components");
  const auto orbit0 = aut->orbit(0);
  const bool swaps = std::binary_search(orbit0.begin(), orbit0.end(), p);
  assert_that(r, "some automorphism swaps the components", swaps);

  ordered_json w = order_witness(r.predicted, r.observed);
  w["predicted_component"] = str(comp_pred);
  w["observed_component"] = str(comp_aut->order());
  bool matches = *r.predicted.aut_order == aut->order() && comp_pred == comp_aut->order();
  if (variant != WreathVariant::General && scanned != H) {
    matches = false;
    w["kind"] = "unit_stabiliser";
    w["unit_stabiliser"] = scanned;
  }
  decide(r, matches, std::move(w));
  return r;
}

TheoremReport check_lemma_4_6_thm_4_8(int n, const std::vector<int>& A_in, const std::string& theorem,
                                      int cap) {
  TheoremReport r;
  r.theorem = theorem;
  const auto A = normalized(n, A_in);
  if (A.size() != A_in.size()) throw Error(ErrorCode::DuplicateElement, "repeated exponent in A");
  const int k = static_cast<int>(A.size());
  r.params = {{"n", n}, {"A", A}, {"k", k}};

  hyp(r, "n >= 5", n >= 5, std::to_string(n));
  hyp(r, "4 <= k < n", 4 <= k && k < n, "k = " + std::to_string(k));
  if (!r.hypotheses_hold()) {
    r.notes.push_back("outside the stated range; nothing computed");
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  std::vector<DihedralElement> elems;
  for (int a : A) elems.push_back(DihedralElement::reflection(a, n));
  const ConnectionSet cs = validate(n, elems);
  hyp(r, "d = 1", cs.d() == 1, "d = " + std::to_string(cs.d()));
  const int g = static_cast<int>(gcd_int(n, k));
  if (theorem == "4.8") hyp(r, "gcd(n, k) = 1", g == 1, "gcd = " + std::to_string(g));

  // affine stabiliser {(u,v) : uA + v = A}, its kernel and projection
  std::vector<std::pair<int, int>> stab;
  for (int u : units(n)) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> image;
      for (int a : A) image.push_back(static_cast<int>((static_cast<std::int64_t>(u) * a + v) % n));
      if (normalized(n, image) == A) stab.emplace_back(u, v);
    }
  }
  std::vector<int> kernel;
  std::set<int> image;
  for (const auto& [u, v] : stab) {
    if (u == 1) kernel.push_back(v);
    image.insert(u);
  }
  const auto U0 = unit_stabilizer(n, cs.delta());
  const std::vector<int> pi_image(image.begin(), image.end());
  ordered_json stab_json = ordered_json::array();
  for (const auto& [u, v] : stab) stab_json.push_back({u, v});
  r.params["affine_stabiliser"] = stab_json;
  r.params["kernel"] = kernel;
  r.params["U0"] = U0;
  r.params["pi_image"] = pi_image;

  if (g == 1) {
    assert_that(r, "kernel of pi is trivial", kernel == std::vector<int>{0}, "kernel = " + set_text(kernel));
  } else {
    r.notes.push_back("gcd(n,k) > 1: kernel = " + set_text(kernel));
  }
  const bool inside = std::includes(U0.begin(), U0.end(), pi_image.begin(), pi_image.end());
  assert_that(r, "pi(Aut(G,S)) within U_0", inside, set_text(pi_image) + " vs " + set_text(U0));
  const auto gs = aut_group_set(cs);
  assert_that(r, "|Aut(G,S)| = |affine stabiliser|", gs.size() == stab.size(),
              std::to_string(gs.size()) + " vs " + std::to_string(stab.size()));

  const auto aut = observe_cayley(r, cs, cap);
  r.predicted.aut_order = BigInt(2 * n) * stab.size();
  r.predicted.normal = true;
  r.predicted.stabilizer = theorem == "4.8" ? "H = " + set_text(pi_image) + " <= U_0"
                                            : "affine stabiliser of order " + std::to_string(stab.size());
  if (!aut) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  const bool normal = *r.observed.normal;
  hyp(r, "Cay(D_2n, S) normal (computed)", normal, normal ? "normal" : "not normal");
  if (!normal) {
    r.notes.push_back("observed |Aut| = " + str(*r.observed.aut_order) + " vs 2n|stab| = " +
                      str(*r.predicted.aut_order));
  }
  decide(r, *r.predicted.aut_order == aut->order(), order_witness(r.predicted, r.observed));
  return r;
}

TheoremReport check_thm_5_2(int n, int k, int cap) {
  TheoremReport r;
  r.theorem = "5.2";
  r.params = {{"n", n}, {"k", k}};
  hyp(r, "n >= 3", n >= 3, std::to_string(n));
  hyp(r, "1 <= k <= n-1", 1 <= k && k <= n - 1, std::to_string(k));
  hyp(r, "k != n/2", n % 2 != 0 || 2 * k != n, n % 2 == 0 ? "n/2 = " + std::to_string(n / 2) : "n odd");
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  const ConnectionSet cs = validate(n, std::vector<DihedralElement>{
                                           DihedralElement::rotation(1, n), DihedralElement::rotation(-1, n),
                                           DihedralElement::reflection(0, n), DihedralElement::reflection(k, n)});
  const Graph g = cayley(cs);
  const auto gs = aut_group_set(cs);
  const std::vector<AffineMap> expected{AffineMap(1, 0, n), AffineMap(n - 1, mod(-k, n), n)};
  ordered_json scan = ordered_json::array();
  for (const auto& m : gs) scan.push_back(m.to_string());
  r.params["aut_gs"] = scan;
  assert_that(r, "Aut(G,S) = {(1,0), (-1,-k)}", gs == expected, scan.dump());
  const auto perms = aut_gs_as_permutations(gs, cs);
  const bool autos = std::all_of(perms.begin(), perms.end(),
                                 [&](const Permutation& p) { return is_isomorphism(g, g, p.images()); });
  assert_that(r, "Aut(G,S) maps are graph automorphisms", autos);

  const auto aut = observe_cayley(r, cs, cap);
  r.predicted.aut_order = BigInt(4 * n);
  r.predicted.normal = true;
  r.predicted.stabilizer = "{id, phi}, order 2";
  if (!aut) {
    r.verdict = Verdict::Inconclusive;
    return r;
  }
  assert_that(r, "4n divides |Aut|", divides(BigInt(4 * n), aut->order()),
              std::to_string(4 * n) + " | " + str(aut->order()));
  ordered_json w = order_witness(r.predicted, r.observed);
  if (r.normality && !r.normality->normal) w["normality"] = normality_witness(*r.normality);
  decide(r, aut->order() == 4 * n && *r.observed.normal, std::move(w));
  return r;
}

TheoremReport check_burnside_schur(const PermGroup& G, int p) {
  TheoremReport r;
  r.theorem = "burnside-schur";
  r.params = {{"p", p}, {"degree", G.degree()}};
  const bool prime = is_prime(p);
  hyp(r, "p prime", prime, std::to_string(p));
  hyp(r, "degree = p", G.degree() == p, std::to_string(G.degree()));
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  hyp(r, "transitive", G.is_transitive());
  // an element of order p exists iff p divides |G|; in degree p it is a p-cycle
  hyp(r, "contains a p-cycle", G.order() % p == 0, "|G| = " + str(G.order()));
  r.observed.aut_order = G.order();
  if (!r.hypotheses_hold()) {
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  const bool two = is_two_transitive(G);
  const bool affine = divides(G.order(), BigInt(p) * (p - 1));
  r.observed.stabilizer = two ? "2-transitive" : affine ? "order divides p(p-1)" : "neither";
  r.predicted.stabilizer = "2-transitive or order dividing p(p-1)";
  decide(r, two || affine,
         ordered_json{{"kind", "dichotomy"}, {"order", str(G.order())}, {"two_transitive", two}});
  return r;
}

}  // namespace dcay
