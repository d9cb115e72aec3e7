#pragma once

// Permutation groups on {0, ..., degree-1} with a deterministic Schreier-Sims
// base and strong generating set. Orders are exact (arbitrary precision).

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dcay {

using BigInt = boost::multiprecision::cpp_int;

class Permutation {
 public:
  /// Identity.
  explicit Permutation(int degree = 0);
  /// images[i] is the image of i; must be a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Smallest moved point, or -1 for the identity.
  int first_moved() const;
  /// g p g^-1
  Permutation conjugate_by(const Permutation& g) const;
  /// "(0 1 2)(3 4)", "()" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)): b acts first.
Permutation operator*(const Permutation& a, const Permutation& b);

class PermGroup {
 public:
  /// Builds the BSGS immediately. Base points start with `base_prefix`
  /// (in order) and continue with the smallest point moved by the element
  /// that forces a new level.
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {});

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const BigInt& order() const noexcept { return order_; }

  std::vector<int> base() const;
  std::vector<int> fundamental_orbit_sizes() const;
  /// Union of the strong generators over all levels.
  std::vector<Permutation> strong_generators() const;

  bool contains(const Permutation& p) const;
  std::vector<int> orbit(int x) const;
  PermGroup stabilizer(int x) const;
  bool is_transitive() const;

  /// Every element, in transversal-product order; nullopt if |G| > limit.
  std::optional<std::vector<Permutation>> elements(std::size_t limit) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<std::optional<Permutation>> transversal;  // u[x](base_point) == x
    std::vector<std::vector<char>> checked;               // [orbit index][gen index]
  };

  void schreier_sims(const std::vector<int>& base_prefix);
  void extend_orbit(Level& level) const;
  Level make_level(int base_point) const;
  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const;
  void check_degree(const Permutation& p) const;

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_;
};

/// Orbit of `points` under the generators (no group structure needed).
std::vector<int> orbit_of(std::span<const Permutation> generators, int degree, int x);

bool is_two_transitive(const PermGroup& g);

struct NormalityResult {
  bool normal = true;
  /// g n g^-1 for generators g of G and n of N, outside N.
  std::optional<Permutation> witness;
  std::optional<Permutation> conjugator;
  std::optional<Permutation> conjugated;
};

/// Requires N <= G (throws NotASubgroup otherwise).
NormalityResult is_normal_in(const PermGroup& n, const PermGroup& g);

enum class Tristate { No, Yes, Unknown };
std::string_view tristate_name(Tristate t);

/// N normal in G, |N||Q| = |G| and N ∩ Q = 1. The intersection is checked by
/// sifting the smaller factor's elements when it has at most `element_limit`
/// elements; otherwise the answer is Unknown.
Tristate is_internal_semidirect(const PermGroup& n, const PermGroup& q, const PermGroup& g,
                                std::size_t element_limit = 10000);

/// rho_g: x -> x g on layered vertex indices, for every g in D_2n (index order).
std::vector<Permutation> right_regular_elements(int n);
/// R(D_2n), generated by rho_r and rho_s.
PermGroup right_regular(int n);

/// lambda_g: x -> g x. With neighbours x S these are the regular
/// automorphisms of the Cayley graph; inversion x -> x^-1 conjugates them to
/// R(D_2n) acting on the graph with adjacency x y^-1 in S.
std::vector<Permutation> left_regular_elements(int n);
/// Generated by lambda_r and lambda_s.
PermGroup left_regular(int n);
/// x -> x^-1 on layered vertex indices.
Permutation inversion_map(int n);

}  // namespace dcay
