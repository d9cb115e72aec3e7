#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "dcay/aut_search.hpp"
#include "dcay/error.hpp"
#include "dcay/graph_io.hpp"
#include "oracles.hpp"

namespace dcay {
namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void expect_automorphisms(const Graph& g, const PermGroup& aut) {
  for (const auto& p : aut.generators()) {
    EXPECT_TRUE(is_isomorphism(g, g, p.images())) << p.cycle_string();
  }
}

TEST(AutSearch, KnownOrders) {
  const std::vector<int> t7{1, 2, 5, 6};
  EXPECT_EQ(automorphism_group(circulant(7, t7)).order(), 14);
  EXPECT_EQ(automorphism_group(cycle(7)).order(), 14);
  EXPECT_EQ(automorphism_group(crown(5)).order(), 2 * factorial(5));
  EXPECT_EQ(automorphism_group(complete_bipartite(5, 5)).order(), 2 * factorial(5) * factorial(5));
  EXPECT_EQ(automorphism_group(complete_bipartite(6, 6)).order(), 2 * factorial(6) * factorial(6));
  EXPECT_EQ(automorphism_group(complete(8)).order(), factorial(8));
  EXPECT_EQ(automorphism_group(empty_graph(6)).order(), 720);
  EXPECT_EQ(automorphism_group(empty_graph(0)).order(), 1);
  EXPECT_EQ(automorphism_group(cocktail_party(3)).order(), 48);
  EXPECT_EQ(automorphism_group(cayley(validate(7, "r,r^-1,r^2,r^-2"))).order(), 392);
}

TEST(AutSearch, TwoRoutesToTheOrderAgree) {
  for (const Graph& g : {crown(6), cayley(validate(9, "r,r^-1,s,s*r^2")), union_disjoint(cycle(5), cycle(5)),
                         cayley(validate(12, "r^6,s,s*r,s*r^5"))}) {
    const auto res = automorphism_search(g);
    EXPECT_EQ(res.search_order, res.group.order());
    EXPECT_EQ(res.base.size(), res.orbit_sizes.size());
    expect_automorphisms(g, res.group);
  }
}

TEST(AutSearch, FixtureCorpusMatchesRecordedAndBruteForceCounts) {
  std::ifstream in(DCAY_FIXTURE_DIR "/small_graphs.g6");
  ASSERT_TRUE(in);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string g6, name;
    std::uint64_t recorded = 0;
    fields >> g6 >> recorded >> name;
    const Graph g = parse_graph6(g6);
    const auto brute = oracle::count_automorphisms(g);
    EXPECT_EQ(brute, recorded) << name;
    const auto res = automorphism_search(g);
    EXPECT_EQ(res.group.order(), brute) << name;
    expect_automorphisms(g, res.group);
    ++count;
  }
  EXPECT_GE(count, 30);
}

TEST(AutSearch, RandomGraphsMatchBruteForce) {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
    ASSERT_EQ(automorphism_group(g).order(), oracle::count_automorphisms(g)) << export_graph6(g);
  }
}

TEST(AutSearch, ColouredSearchPreservesColours) {
  const Graph g = cycle(6);
  const std::vector<int> colors{0, 1, 0, 1, 0, 1};
  const auto res = automorphism_search(g, 64, colors);
  EXPECT_EQ(res.group.order(), 6);
  for (const auto& p : res.group.generators()) {
    for (int v = 0; v < 6; ++v) EXPECT_EQ(colors[p(v)], colors[v]);
  }
  const std::vector<int> short_colors{0, 1};
  EXPECT_THROW(automorphism_search(g, 64, short_colors), Error);
}

TEST(AutSearch, VertexCap) {
  try {
    automorphism_group(complete(20), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCapExceeded);
  }
  EXPECT_GT(default_vertex_cap(), 0);
}

TEST(AutGS, ThmFiveTwoFamily) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      if (2 * k == n) continue;
      const auto cs = validate(n, "r,r^-1,s,s*r^" + std::to_string(k));
      const auto maps = aut_group_set(cs);
      EXPECT_EQ(maps, (std::vector<AffineMap>{AffineMap(1, 0, n), AffineMap(-1, -k, n)})) << n << " " << k;
    }
  }
}

TEST(AutGS, MapsAreGraphAutomorphismsFixingTheIdentity) {
  for (const char* s : {"r,r^-1,r^2,r^-2", "s,s*r,s*r^2,s*r^4", "r,r^-1,r^4,s*r^2", "r^4,s,s*r,s*r^3"}) {
    const auto cs = validate(8, s);
    const Graph g = cayley(cs);
    const auto maps = aut_group_set(cs);
    ASSERT_FALSE(maps.empty());
    for (const auto& p : aut_gs_as_permutations(maps, cs)) {
      EXPECT_TRUE(is_isomorphism(g, g, p.images())) << s;
      EXPECT_EQ(p(0), 0);
    }
    // exhaustive: psi preserves S exactly for the listed maps
    for (int u : units(8)) {
      for (int v = 0; v < 8; ++v) {
        const AffineMap psi(u, v, 8);
        bool preserves = true;
        for (const auto& x : cs.elements()) preserves = preserves && cs.contains(aff_apply(psi, x));
        EXPECT_EQ(preserves, std::find(maps.begin(), maps.end(), psi) != maps.end());
      }
    }
  }
  const auto cs = validate(7, "r,r^-1,s,s*r^3");
  const std::vector<AffineMap> wrong{AffineMap(2, 0, 7)};
  try {
    aut_gs_as_permutations(wrong, cs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MapDoesNotPreserveS);
  }
}

TEST(Normality, Examples) {
  const auto normal = cayley_normality(validate(7, "r,r^-1,s,s*r^3"));
  EXPECT_TRUE(normal.normal);
  EXPECT_EQ(normal.aut_order, 28);
  EXPECT_TRUE(normal.consistent);
  EXPECT_TRUE(normal.stabilizer_equals_aut_gs);

  const auto wreath = cayley_normality(validate(7, "r,r^-1,r^2,r^-2"));
  EXPECT_FALSE(wreath.normal);
  EXPECT_EQ(wreath.aut_order, 392);
  ASSERT_TRUE(wreath.witness.has_value());
  EXPECT_FALSE(left_regular(7).contains(*wreath.witness));
  EXPECT_TRUE(wreath.consistent);

  // an automorphism group without the translations is rejected
  EXPECT_THROW(cayley_is_normal(PermGroup(14, {}), 7), Error);
}

TEST(Normality, ConjugationAgreesWithStabiliserComparison) {
  std::mt19937 rng(77);
  int instances = 0;
  for (int n = 3; n <= 10; ++n) {
    std::uniform_int_distribution<int> pick(1, 2 * n - 1);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<DihedralElement> elems;
      for (int i = 0; i < 2; ++i) {
        const auto g = DihedralElement::from_index(pick(rng), n);
        for (const auto& x : {g, dh_inv(g)}) {
          if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
        }
      }
      std::optional<ConnectionSet> cs;
      try {
        cs = validate(n, elems);
      } catch (const Error&) {
        continue;
      }
      const auto ev = cayley_normality(*cs);
      EXPECT_TRUE(ev.regular_in_aut);
      EXPECT_TRUE(ev.aut_gs_in_stabilizer);
      EXPECT_TRUE(ev.consistent) << cs->to_string();
      EXPECT_EQ(ev.aut_order % (2 * n * ev.aut_gs_size), 0);
      ++instances;
    }
  }
  EXPECT_GT(instances, 40);
}

}  // namespace
}  // namespace dcay
