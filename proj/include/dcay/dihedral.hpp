#pragma once

// Exact arithmetic in Z_n, the dihedral group D_2n and its automorphisms.
//
// Elements are kept in the normal form s^eps r^exp with 0 <= exp < n.
// Automorphisms of D_2n (n >= 3) are the maps psi_{u,v}: r -> r^u, s -> r^v s
// with u a unit mod n.

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcay {

/// Reduces x into [0, n).
constexpr int mod(std::int64_t x, int n) {
  const std::int64_t r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

class DihedralElement {
 public:
  DihedralElement(bool reflect, std::int64_t exp, int n);

  static DihedralElement identity(int n) { return {false, 0, n}; }
  static DihedralElement rotation(std::int64_t exp, int n) { return {false, exp, n}; }
  /// s r^exp
  static DihedralElement reflection(std::int64_t exp, int n) { return {true, exp, n}; }

  bool reflect() const noexcept { return reflect_; }
  int exp() const noexcept { return exp_; }
  int n() const noexcept { return n_; }
  bool is_identity() const noexcept { return !reflect_ && exp_ == 0; }

  /// Vertex index in a layered Cayley graph: r^i -> i, s r^i -> n + i.
  int index() const noexcept { return reflect_ ? n_ + exp_ : exp_; }
  static DihedralElement from_index(int index, int n);

  /// `e`, `r^3`, `s*r^3`.
  std::string to_string() const;

  auto operator<=>(const DihedralElement&) const = default;

 private:
  // Member order fixes the ordering: rotations before reflections, then by exponent.
  int n_;
  bool reflect_;
  int exp_;
};

DihedralElement dh_mul(const DihedralElement& a, const DihedralElement& b);
DihedralElement dh_inv(const DihedralElement& a);
int dh_order(const DihedralElement& a);

/// Parses `e`, `r`, `r^k`, `s`, `s*r^k`, `s*r`, `r^k*s`, `r*s`. Exponents may be negative.
DihedralElement parse_element(std::string_view text, int n);

/// Comma-separated element list.
std::vector<DihedralElement> parse_element_list(std::string_view text, int n);

/// psi_{u,v}: r -> r^u, s -> r^v s. Equivalently r^e -> r^{ue}, s r^e -> s r^{ue - v}.
class AffineMap {
 public:
  AffineMap(std::int64_t u, std::int64_t v, int n);

  static AffineMap identity(int n) { return {1, 0, n}; }

  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }
  int n() const noexcept { return n_; }

  /// Action x -> u x + v on Z_n.
  int apply_affine(int x) const noexcept { return mod(static_cast<std::int64_t>(u_) * x + v_, n_); }
  AffineMap inverse() const;

  std::string to_string() const;

  auto operator<=>(const AffineMap&) const = default;

 private:
  int n_;
  int u_;
  int v_;
};

DihedralElement aff_apply(const AffineMap& phi, const DihedralElement& g);
/// phi1 o phi2 = (u1 u2, v1 + u1 v2).
AffineMap aff_compose(const AffineMap& phi1, const AffineMap& phi2);

std::int64_t gcd_int(std::int64_t a, std::int64_t b);
int inverse_mod(int u, int n);
bool is_prime(std::int64_t p);

/// Ascending units of Z_n.
std::vector<int> units(int n);

/// Multiplicative closure of `gens` inside (Z_n)^x.
std::set<int> unit_subgroup(std::span<const int> gens, int n);

/// gcd(n, xs mod n ...); gcd(n, {}) = n.
int gcd_all(int n, std::span<const int> xs);

}  // namespace dcay
