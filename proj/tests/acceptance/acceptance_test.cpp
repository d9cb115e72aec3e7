// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "dcay/error.hpp"
#include "dcay/graph_io.hpp"
#include "oracles.hpp"

namespace {

using namespace dcay;

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string rotations(int n, const std::vector<int>& reps) {
  std::string out;
  for (int t : reps) {
    for (int e : {t, n - t}) out += (out.empty() ? "r^" : ",r^") + std::to_string(e);
  }
  return out;
}

std::string reflections(const std::vector<int>& A) {
  std::string out;
  for (int a : A) out += (out.empty() ? "s*r^" : ",s*r^") + std::to_string(a);
  return out;
}

ConnectionSet rotation_set(int n, const std::vector<int>& reps) {
  // duplicates (t = n - t) are dropped before validation
  std::vector<DihedralElement> elems;
  for (int t : symmetric_closure(n, reps)) elems.push_back(DihedralElement::rotation(t, n));
  return validate(n, elems);
}

// Connection sets whose Aut was computed in criteria 1-6; criterion 7 audits them.
std::vector<ConnectionSet> g_audited;
// Transitive groups of prime degree met along the way; criterion 8 audits them.
struct PrimeGroup {
  PermGroup group;
  int p;
  std::string label;
};
std::vector<PrimeGroup> g_prime_groups;

// Every component of g is mapped onto `ref` by an explicitly checked bijection.
bool components_isomorphic_to(const Graph& g, const Graph& ref, std::size_t expected, std::ostream& why) {
  const auto comps = components(g);
  if (comps.size() != expected) {
    why << comps.size() << " components, expected " << expected << "; ";
    return false;
  }
  for (const auto& c : comps) {
    const Graph sub = g.induced(c);
    const auto m = isomorphic(sub, ref);
    if (!m || !is_isomorphism(sub, ref, *m)) {
      why << "component at " << c.front() << " not isomorphic; ";
      return false;
    }
  }
  return true;
}

bool criterion_table1(std::ostream& why) {
  struct Row {
    int n;
    std::vector<int> reps;
    Graph ref;
  };
  const std::vector<int> circ_reps{1, 3};
  const std::vector<Row> rows{{4, {1, 2}, complete(4)},
                              {6, {1, 2}, cocktail_party(3)},
                              {6, {1, 3}, circulant(6, symmetric_closure(6, circ_reps))},
                              {8, {1, 3}, complete_bipartite(4, 4)}};
  bool ok = true;
  for (const auto& row : rows) {
    const auto cs = rotation_set(row.n, row.reps);
    g_audited.push_back(cs);
    const Graph g = cayley(cs);
    const Graph circ = circulant(row.n, cs.T());
    const auto m = isomorphic(circ, row.ref);
    if (!m || !is_isomorphism(circ, row.ref, *m)) {
      why << "Cay(Z_" << row.n << ") differs from reference; ";
      ok = false;
    }
    ok = components_isomorphic_to(g, row.ref, 2, why) && ok;
  }
  const auto table = cli::reproduce_table(1, 64);
  if (table.rows.size() != 4 || !table.all_match()) {
    why << "fixture diff reports a mismatch; ";
    ok = false;
  }
  why << "4 rows, each two components with explicit isomorphisms";
  return ok;
}

bool criterion_table2(std::ostream& why) {
  struct Row {
    int p;
    int t;
    int comp_order;
    int whole_order;
  };
  const std::vector<Row> rows{{7, 2, 14, 392}, {11, 2, 22, 968}, {13, 2, 26, 1352}, {17, 4, 68, 9248}};
  bool ok = true;
  for (const auto& row : rows) {
    const auto cs = rotation_set(row.p, {1, row.t});
    g_audited.push_back(cs);
    const Graph g = cayley(cs);
    const Graph circ = circulant(row.p, cs.T());
    ok = components_isomorphic_to(g, circ, 2, why) && ok;
    const auto H = unit_stabilizer(row.p, cs.T());
    const PermGroup comp_aut = automorphism_group(circ);
    g_prime_groups.push_back({comp_aut, row.p, "Circ(" + std::to_string(row.p) + ";{1," + std::to_string(row.t) + "})"});
    const auto brute = oracle::count_automorphisms(circ);
    if (comp_aut.order() != row.comp_order || static_cast<int>(row.p * H.size()) != row.comp_order ||
        brute != static_cast<std::uint64_t>(row.comp_order)) {
      why << "p=" << row.p << " component order " << comp_aut.order() << " (brute " << brute << "); ";
      ok = false;
    }
    const PermGroup aut = automorphism_group(g);
    const BigInt predicted = BigInt(row.comp_order) * row.comp_order * 2;
    if (aut.order() != row.whole_order || predicted != row.whole_order) {
      why << "p=" << row.p << " |Aut| " << aut.order() << "; ";
      ok = false;
    }
    const auto report = check_wreath(row.p, {1, row.t}, row.p == 17 ? WreathVariant::General : WreathVariant::TwoUnits);
    if (report.verdict != Verdict::Verified) {
      why << "p=" << row.p << " verdict " << verdict_name(report.verdict) << "; ";
      ok = false;
    }
  }
  // p = 7: the complement of Circ(7;{1,2}) is Circ(7;{3}) = C_7, whose group is dihedral of order 14.
  const Graph c7 = circulant(7, rotation_set(7, {1, 2}).T()).complement();
  if (!isomorphic(c7, cycle(7)) || oracle::count_automorphisms(c7) != 14) {
    why << "p=7 complement is not C_7; ";
    ok = false;
  }
  const auto table = cli::reproduce_table(2, 64);
  if (!table.all_match()) {
    why << "fixture diff reports a mismatch; ";
    ok = false;
  }
  why << "component orders 14, 22, 26, 68; whole orders 392, 968, 1352, 9248";
  return ok;
}

bool criterion_prop31(std::ostream& why) {
  const auto cs = validate(10, "r^2,r^-2,r^4,r^-4");
  g_audited.push_back(cs);
  const Graph g = cayley(cs);
  const bool ok = components_isomorphic_to(g, complete(5), 4, why);
  for (const auto& c : components(g)) {
    g_prime_groups.push_back({automorphism_group(g.induced(c)), 5, "K_5 component"});
  }
  why << "4 components, each K_5";
  return ok && analyze(cs).verified;
}

bool criterion_reflections(std::ostream& why) {
  bool ok = true;
  int sets = 0;
  for (int n = 4; n <= 6; ++n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const auto knn = validate(n, reflections(all));
    g_audited.push_back(knn);
    const Graph gk = cayley(knn);
    const auto mk = isomorphic(gk, complete_bipartite(n, n));
    const BigInt knn_order = automorphism_group(gk).order();
    if (!mk || knn_order != 2 * factorial(n) * factorial(n)) {
      why << "n=" << n << " k=n: |Aut| " << knn_order << "; ";
      ok = false;
    }
    all.pop_back();
    const auto cr = validate(n, reflections(all));
    g_audited.push_back(cr);
    const Graph gc = cayley(cr);
    const auto mc = isomorphic(gc, crown(n));
    const BigInt crown_order = automorphism_group(gc).order();
    if (!mc || crown_order != 2 * factorial(n)) {
      why << "n=" << n << " k=n-1: |Aut| " << crown_order << "; ";
      ok = false;
    }
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> A;
      for (int a = 0; a < n; ++a) {
        if (mask >> a & 1) A.push_back(a);
      }
      const auto cs = validate(n, reflections(A));
      g_audited.push_back(cs);
      const Graph g = cayley(cs);
      std::vector<std::vector<Edge>> parts;
      for (int a : A) parts.push_back(matching_of_reflection(n, a).edges);
      const auto pc = edge_partition_check(g, parts);
      const auto colouring = is_bipartite(g);
      bool parts_are_layers = colouring.has_value();
      for (int v = 0; colouring && v < 2 * n; ++v) parts_are_layers = parts_are_layers && (*colouring)[v] == (v < n ? 0 : 1);
      if (!pc.ok || !parts_are_layers) {
        why << "n=" << n << " A=" << reflections(A) << ": " << pc.describe() << "; ";
        ok = false;
      }
      ++sets;
    }
  }
  why << sets << " reflection sets decomposed into their k matchings with bipartition (R, F)";
  return ok;
}

bool criterion_thm52_invariants(std::ostream& why) {
  bool ok = true;
  int instances = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      if (2 * k == n) continue;
      const auto cs = validate(n, "r,r^-1,s,s*r^" + std::to_string(k));
      g_audited.push_back(cs);
      const auto maps = aut_group_set(cs);
      const std::vector<AffineMap> expected{AffineMap(1, 0, n), AffineMap(-1, -k, n)};
      const Graph g = cayley(cs);
      bool autos = true;
      for (const auto& p : aut_gs_as_permutations(maps, cs)) autos = autos && is_isomorphism(g, g, p.images());
      const BigInt order = automorphism_group(g).order();
      if (maps != expected || !autos || order % (4 * n) != 0) {
        why << "n=" << n << " k=" << k << " fails; ";
        ok = false;
      }
      ++instances;
    }
  }
  why << instances << " instances: Aut(G,S) = {(1,0), (-1,-k)}, both automorphisms, 4n | |Aut|";
  return ok;
}

bool criterion_thm52_discrepancy(std::ostream& why) {
  const auto report = check_thm_5_2(3, 1);
  const Graph g = cayley(validate(3, "r,r^-1,s,s*r"));
  g_audited.push_back(validate(3, "r,r^-1,s,s*r"));
  const Graph comp = g.complement();
  const bool forced = comp.regular_degree() == 1 && oracle::count_automorphisms(g) == 48;
  const bool refuted = report.verdict == Verdict::Refuted && report.witness.is_object() &&
                       report.witness.value("kind", "") == "order_mismatch" &&
                       report.witness.value("observed", "") == "48" && report.witness.value("predicted", "") == "12";
  why << "verdict " << verdict_name(report.verdict) << ", witness " << report.witness.dump();
  return forced && refuted;
}

bool criterion_normality(std::ostream& why) {
  int disagreements = 0;
  int normal = 0;
  for (const auto& cs : g_audited) {
    const auto ev = cayley_normality(cs);
    if (!ev.consistent) {
      ++disagreements;
      why << cs.to_string() << " disagrees; ";
    }
    normal += ev.normal ? 1 : 0;
  }
  why << g_audited.size() << " instances (" << normal << " normal), " << disagreements << " disagreements";
  return disagreements == 0 && !g_audited.empty();
}

bool criterion_burnside_schur(std::ostream& why) {
  for (int p : {5, 7, 11, 13, 17}) {
    for (int a = 1; a <= p / 2; ++a) {
      for (int b = a + 1; b <= p / 2; ++b) {
        const auto T = symmetric_closure(p, std::vector<int>{a, b});
        g_prime_groups.push_back({automorphism_group(circulant(p, T)), p, circulant_name(p, T)});
      }
    }
  }
  int violations = 0, two_transitive = 0;
  for (const auto& [group, p, label] : g_prime_groups) {
    const auto r = check_burnside_schur(group, p);
    const bool two = is_two_transitive(group);
    const bool affine = (BigInt(p) * (p - 1)) % group.order() == 0;
    two_transitive += two ? 1 : 0;
    if (!group.is_transitive() || r.verdict != Verdict::Verified || !(two || affine)) {
      why << label << " fails; ";
      ++violations;
    }
  }
  why << g_prime_groups.size() << " groups (" << two_transitive << " 2-transitive), " << violations
      << " violations";
  return violations == 0;
}

bool criterion_engine(std::ostream& why) {
  std::ifstream in(DCAY_FIXTURE_DIR "/small_graphs.g6");
  std::string line;
  int graphs = 0, bad = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string g6;
    std::uint64_t recorded = 0;
    fields >> g6 >> recorded;
    const Graph g = parse_graph6(g6);
    if (g.order() > 8) continue;
    const auto brute = oracle::count_automorphisms(g);
    if (automorphism_group(g).order() != brute || brute != recorded) {
      why << g6 << " mismatch; ";
      ++bad;
    }
    ++graphs;
  }
  std::mt19937 rng(20261016);
  int groups = 0;
  for (int trial = 0; trial < 200 && groups < 25; ++trial) {
    const int degree = 3 + trial % 8;
    std::vector<Permutation> gens;
    for (int i = 0; i <= trial % 3; ++i) {
      gens.push_back(trial % 2 ? oracle::random_sparse_permutation(degree, rng) : oracle::random_permutation(degree, rng));
    }
    const auto closure = oracle::closure_order(gens, degree, 5000);
    if (closure == 0) continue;
    if (PermGroup(degree, gens).order() != closure) {
      why << "group trial " << trial << " mismatch; ";
      ++bad;
    }
    ++groups;
  }
  why << graphs << " fixture graphs, " << groups << " random groups, " << bad << " mismatches";
  return bad == 0 && graphs >= 30 && groups >= 20;
}

bool criterion_lemma46(std::ostream& why) {
  bool ok = true;
  struct Gate {
    int n;
    std::vector<int> A;
    int observed;
  };
  for (const auto& gate : {Gate{7, {0, 1, 2, 4}, 336}, Gate{5, {0, 1, 2, 3}, 240}}) {
    const auto r = check_lemma_4_6_thm_4_8(gate.n, gate.A, "4.8");
    const auto brute = oracle::count_automorphisms(cayley(validate(gate.n, reflections(gate.A))));
    bool normality_failed = false;
    for (const auto& h : r.hypotheses) normality_failed = normality_failed || (!h.holds && h.name.find("normal") != std::string::npos);
    if (r.verdict != Verdict::Inapplicable || !normality_failed || r.observed.aut_order != gate.observed ||
        brute != static_cast<std::uint64_t>(gate.observed)) {
      why << "n=" << gate.n << " gate: " << verdict_name(r.verdict) << "; ";
      ok = false;
    }
  }
  int instances = 0;
  for (int n = 5; n <= 12; ++n) {
    for (int k = 4; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      // every k-subset containing 0; translates have the same kernel
      for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        if (__builtin_popcount(mask) != k - 1) continue;
        std::vector<int> A{0};
        for (int a = 1; a < n; ++a) {
          if (mask >> (a - 1) & 1) A.push_back(a);
        }
        const auto r = check_lemma_4_6_thm_4_8(n, A, "4.8");
        for (const auto& a : r.assertions) {
          if (a.name == "kernel of pi is trivial" && !a.holds) {
            why << "n=" << n << " A=" << reflections(A) << " kernel " << a.detail << "; ";
            ok = false;
          }
        }
        if (r.params.at("kernel") != nlohmann::ordered_json::array({0})) ok = false;
        ++instances;
      }
    }
  }
  why << "gates at 336 and 240; trivial kernel on " << instances << " coprime instances";
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::ostream&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Table 1 reproduction", criterion_table1},
      {2, "Table 2 wreath orders", criterion_table2},
      {3, "rotation set with d = 2 splits into four K_5", criterion_prop31},
      {4, "reflection sets: K_{n,n}, crowns and matching decompositions", criterion_reflections},
      {5, "two rotations and two reflections: guaranteed invariants", criterion_thm52_invariants},
      {6, "two rotations and two reflections: n=3 discrepancy detected", criterion_thm52_discrepancy},
      {7, "normality by conjugation agrees with the stabiliser test", criterion_normality},
      {8, "Burnside-Schur dichotomy on prime degree groups", criterion_burnside_schur},
      {9, "search engine against brute force and closure", criterion_engine},
      {10, "reflection set gating and kernel triviality", criterion_lemma46},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream why;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.2f s) -- %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs, why.str().c_str());
    failures += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
