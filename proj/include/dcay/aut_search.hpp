#pragma once

// Graph automorphism groups by partition refinement and backtracking, plus
// the Cayley-specific companions Aut(G,S), vertex stabilisers and the
// normality test. Cayley graphs here join x to x s, so the regular subgroup
// of Aut is the left translation group; it is the image of R(D_2n) under the
// inversion isomorphism from the x y^-1 in S convention, and normality of one
// is normality of the other.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcay/connset.hpp"
#include "dcay/dihedral.hpp"
#include "dcay/graph.hpp"
#include "dcay/perm_group.hpp"

namespace dcay {

/// Vertex cap for automorphism searches: DCAY_VERTEX_CAP if set to a
/// positive integer, else 64.
int default_vertex_cap();

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves_tested = 0;
};

struct AutomorphismResult {
  PermGroup group;
  /// Vertices individualised along the first path; a base for the group.
  std::vector<int> base;
  /// |orbit of base[i]| in the pointwise stabiliser of base[0..i).
  std::vector<int> orbit_sizes;
  /// Product of orbit_sizes; equals group.order() (independent route).
  BigInt search_order;
  SearchStats stats;
};

/// Full automorphism group. Without `colors` the initial partition is
/// trivial; with colours only colour-preserving automorphisms are returned.
/// Throws SizeCapExceeded when order(g) > cap.
AutomorphismResult automorphism_search(const Graph& g, int cap = default_vertex_cap(),
                                       std::span<const int> colors = {});
PermGroup automorphism_group(const Graph& g, int cap = default_vertex_cap());

/// Stabiliser of vertex 0 (the identity of D_2n on a layered graph).
PermGroup vertex_stabilizer_at_identity(const PermGroup& aut);

/// Every psi_{u,v} with psi(S) = S, sorted by (u, v).
std::vector<AffineMap> aut_group_set(const ConnectionSet& cs);

/// psi as a permutation of the 2n layered vertex indices.
Permutation affine_permutation(const AffineMap& psi);
/// Throws MapDoesNotPreserveS if some map moves S.
std::vector<Permutation> aut_gs_as_permutations(std::span<const AffineMap> maps,
                                                const ConnectionSet& cs);

struct NormalityEvidence {
  bool normal = true;
  /// Conjugate g t g^-1 of a regular translation t that is not itself a
  /// translation, with its ingredients.
  std::optional<Permutation> witness;
  std::optional<Permutation> conjugator;
  std::optional<Permutation> conjugated;
  BigInt aut_order;
  BigInt stabilizer_order;
  std::size_t aut_gs_size = 0;
  bool regular_in_aut = false;        // regular translations <= Aut
  bool aut_gs_in_stabilizer = false;  // Aut(G,S) <= Aut_e
  bool stabilizer_equals_aut_gs = false;
  /// normal == stabilizer_equals_aut_gs
  bool consistent = false;
};

/// Normality of the regular translation group in `aut`, by conjugating
/// generators. Stabiliser fields are left empty.
NormalityEvidence cayley_is_normal(const PermGroup& aut, int n);
NormalityEvidence cayley_is_normal(const Graph& g, int n, int cap = default_vertex_cap());
/// Full evidence for Cay(D_2n, S), including the stabiliser comparison.
NormalityEvidence cayley_normality(const ConnectionSet& cs, const PermGroup& aut);
NormalityEvidence cayley_normality(const ConnectionSet& cs, int cap = default_vertex_cap());

}  // namespace dcay
