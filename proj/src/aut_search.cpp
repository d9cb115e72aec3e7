#include "dcay/aut_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "dcay/error.hpp"
#include "refine.hpp"

namespace dcay {

namespace {

// Orbits of the group generated so far.
class OrbitPartition {
 public:
  explicit OrbitPartition(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void absorb(const Permutation& p) {
    for (int x = 0; x < p.degree(); ++x) {
      const int a = find(x);
      const int b = find(p(x));
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int default_vertex_cap() {
  if (const char* env = std::getenv("DCAY_VERTEX_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1'000'000) return static_cast<int>(v);
  }
  return 64;
}

AutomorphismResult automorphism_search(const Graph& g, int cap, std::span<const int> colors) {
  const int n = g.order();
  if (n > cap) {
    throw Error(ErrorCode::SizeCapExceeded, "graph has " + std::to_string(n) +
                                                " vertices, automorphism cap is " +
                                                std::to_string(cap));
  }
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "colouring length differs from graph order");
  }

  SearchStats stats;
  std::vector<Permutation> gens;
  std::vector<int> base;
  std::vector<int> orbit_sizes;

  if (n > 0) {
    detail::Partition root = colors.empty() ? detail::Partition(n) : detail::Partition(colors);
    const auto path = detail::first_path(g, std::move(root));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) base.push_back(path[i].individualized);
    orbit_sizes.assign(base.size(), 1);

    OrbitPartition orbits(n);
    std::vector<int> mapping(n, -1);
    // Deepest level first: generators found below fix every earlier base point,
    // so they already lie in the stabiliser searched at shallower levels.
    for (std::size_t level = base.size(); level-- > 0;) {
      const auto& node = path[level].partition;
      const auto cell = node.cell(node.target_cell());
      const int v = base[level];
      std::vector<int> failed;
      for (int w : cell) {
        if (w == v || orbits.find(w) == orbits.find(v)) continue;
        const bool known_failure = std::any_of(failed.begin(), failed.end(), [&](int f) {
          return orbits.find(f) == orbits.find(w);
        });
        if (known_failure) continue;
        detail::Partition child = node;
        const std::uint64_t trace = child.individualize_and_refine(g, w);
        const auto& expected = path[level + 1];
        bool found = false;
        if (trace == expected.trace && child.cell_count() == expected.partition.cell_count()) {
          found = detail::find_equivalent_leaf(g, path, g, child, level + 1, mapping, stats.nodes);
        }
        if (found) {
          ++stats.leaves_tested;
          Permutation gamma(mapping);
          orbits.absorb(gamma);
          gens.push_back(std::move(gamma));
        } else {
          failed.push_back(w);
        }
      }
      orbit_sizes[level] = static_cast<int>(std::count_if(
          cell.begin(), cell.end(), [&](int w) { return orbits.find(w) == orbits.find(v); }));
    }
  }

  for (const auto& gamma : gens) {
    if (!is_isomorphism(g, g, gamma.images())) {
      throw Error(ErrorCode::InvalidArgument, "internal: search produced a non-automorphism");
    }
  }
  BigInt search_order = 1;
  for (int s : orbit_sizes) search_order *= s;
  PermGroup group(n, gens, base);
  if (group.order() != search_order) {
    throw Error(ErrorCode::InvalidArgument, "internal: search tree order " + search_order.str() +
                                                " differs from BSGS order " + group.order().str());
  }
  return {std::move(group), std::move(base), std::move(orbit_sizes), std::move(search_order), stats};
}

PermGroup automorphism_group(const Graph& g, int cap) {
  return automorphism_search(g, cap).group;
}

PermGroup vertex_stabilizer_at_identity(const PermGroup& aut) { return aut.stabilizer(0); }

std::vector<AffineMap> aut_group_set(const ConnectionSet& cs) {
  const int n = cs.n();
  std::vector<AffineMap> out;
  for (int u : units(n)) {
    for (int v = 0; v < n; ++v) {
      const AffineMap psi(u, v, n);
      const bool fixes = std::all_of(cs.elements().begin(), cs.elements().end(),
                                     [&](const DihedralElement& x) {
                                       return cs.contains(aff_apply(psi, x));
                                     });
      if (fixes) out.push_back(psi);
    }
  }
  return out;
}

Permutation affine_permutation(const AffineMap& psi) {
  const int n = psi.n();
  std::vector<int> images(2 * n);
  for (int x = 0; x < 2 * n; ++x) {
    images[x] = aff_apply(psi, DihedralElement::from_index(x, n)).index();
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> aut_gs_as_permutations(std::span<const AffineMap> maps,
                                                const ConnectionSet& cs) {
  std::vector<Permutation> out;
  for (const auto& psi : maps) {
    if (psi.n() != cs.n()) throw Error(ErrorCode::ModulusMismatch, "map modulus differs from S");
    for (const auto& x : cs.elements()) {
      if (!cs.contains(aff_apply(psi, x))) {
        throw Error(ErrorCode::MapDoesNotPreserveS,
                    psi.to_string() + " sends " + x.to_string() + " outside S");
      }
    }
    out.push_back(affine_permutation(psi));
  }
  return out;
}

NormalityEvidence cayley_is_normal(const PermGroup& aut, int n) {
  if (aut.degree() != 2 * n) throw Error(ErrorCode::DegreeMismatch, "group degree is not 2n");
  NormalityEvidence ev;
  ev.aut_order = aut.order();
  const auto regular = left_regular_elements(n);
  ev.regular_in_aut = std::all_of(regular.begin(), regular.end(),
                                  [&](const Permutation& p) { return aut.contains(p); });
  if (!ev.regular_in_aut) {
    throw Error(ErrorCode::NotASubgroup, "the regular translations are not contained in the given group");
  }
  const auto result = is_normal_in(left_regular(n), aut);
  ev.normal = result.normal;
  ev.witness = result.witness;
  ev.conjugator = result.conjugator;
  ev.conjugated = result.conjugated;
  return ev;
}

NormalityEvidence cayley_is_normal(const Graph& g, int n, int cap) {
  return cayley_is_normal(automorphism_group(g, cap), n);
}

NormalityEvidence cayley_normality(const ConnectionSet& cs, const PermGroup& aut) {
  NormalityEvidence ev = cayley_is_normal(aut, cs.n());
  const PermGroup stab = vertex_stabilizer_at_identity(aut);
  ev.stabilizer_order = stab.order();
  const auto maps = aut_group_set(cs);
  const auto perms = aut_gs_as_permutations(maps, cs);
  ev.aut_gs_size = perms.size();
  ev.aut_gs_in_stabilizer = std::all_of(perms.begin(), perms.end(),
                                        [&](const Permutation& p) { return stab.contains(p); });
  // distinct affine maps give distinct permutations, so equal sizes plus
  // inclusion means equality
  ev.stabilizer_equals_aut_gs = ev.aut_gs_in_stabilizer && stab.order() == BigInt(perms.size());
  ev.consistent = ev.normal == ev.stabilizer_equals_aut_gs;
  return ev;
}

NormalityEvidence cayley_normality(const ConnectionSet& cs, int cap) {
  return cayley_normality(cs, automorphism_group(cayley(cs), cap));
}

}  // namespace dcay
