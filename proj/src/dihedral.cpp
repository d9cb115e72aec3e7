#include "dcay/dihedral.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "dcay/error.hpp"

namespace dcay {

namespace {

void require_same_modulus(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::ModulusMismatch,
                "moduli " + std::to_string(a) + " and " + std::to_string(b) + " differ");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses "r" or "r^k"; returns the exponent.
std::int64_t parse_rotation_factor(std::string_view f, std::string_view whole) {
  if (f == "r") return 1;
  if (f.size() < 3 || f[0] != 'r' || f[1] != '^') {
    throw Error(ErrorCode::ParseError, "bad factor '" + std::string(f) + "' in '" +
                                           std::string(whole) + "'");
  }
  std::string_view digits = f.substr(2);
  std::int64_t value = 0;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DihedralElement::DihedralElement(bool reflect, std::int64_t exp, int n)
    : n_(n), reflect_(reflect), exp_(0) {
  if (n < 1) throw Error(ErrorCode::NTooSmall, "modulus must be >= 1");
  exp_ = mod(exp, n);
}

DihedralElement DihedralElement::from_index(int index, int n) {
  if (index < 0 || index >= 2 * n) {
    throw Error(ErrorCode::PointOutOfRange, "vertex index " + std::to_string(index));
  }
  return index < n ? rotation(index, n) : reflection(index - n, n);
}

std::string DihedralElement::to_string() const {
  if (is_identity()) return "e";
  const std::string rot = "r^" + std::to_string(exp_);
  return reflect_ ? "s*" + rot : rot;
}

DihedralElement dh_mul(const DihedralElement& a, const DihedralElement& b) {
  require_same_modulus(a.n(), b.n());
  // s^ea r^xa s^eb r^xb = s^(ea+eb) r^((-1)^eb xa + xb)
  const std::int64_t moved = b.reflect() ? -static_cast<std::int64_t>(a.exp()) : a.exp();
  return {a.reflect() != b.reflect(), moved + b.exp(), a.n()};
}

DihedralElement dh_inv(const DihedralElement& a) {
  if (a.reflect()) return a;
  return DihedralElement::rotation(-static_cast<std::int64_t>(a.exp()), a.n());
}

int dh_order(const DihedralElement& a) {
  if (a.reflect()) return 2;
  return a.n() / static_cast<int>(gcd_int(a.n(), a.exp()));
}

DihedralElement parse_element(std::string_view text, int n) {
  const std::string_view t = trim(text);
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty element");
  if (t == "e") return DihedralElement::identity(n);
  if (t == "s") return DihedralElement::reflection(0, n);
  const auto star = t.find('*');
  if (star == std::string_view::npos) {
    return DihedralElement::rotation(parse_rotation_factor(t, t), n);
  }
  const std::string_view left = trim(t.substr(0, star));
  const std::string_view right = trim(t.substr(star + 1));
  if (left == "s") return DihedralElement::reflection(parse_rotation_factor(right, t), n);
  if (right == "s") {
    // r^a s = s r^{-a}
    return DihedralElement::reflection(-parse_rotation_factor(left, t), n);
  }
  throw Error(ErrorCode::ParseError, "cannot parse element '" + std::string(t) + "'");
}

std::vector<DihedralElement> parse_element_list(std::string_view text, int n) {
  std::vector<DihedralElement> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_element(text.substr(start, comma - start), n));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

AffineMap::AffineMap(std::int64_t u, std::int64_t v, int n) : n_(n), u_(0), v_(0) {
  if (n < 1) throw Error(ErrorCode::NTooSmall, "modulus must be >= 1");
  u_ = mod(u, n);
  v_ = mod(v, n);
  if (gcd_int(u_, n) != 1) {
    throw Error(ErrorCode::NonUnit, std::to_string(u) + " is not a unit mod " + std::to_string(n));
  }
}

AffineMap AffineMap::inverse() const {
  const int ui = inverse_mod(u_, n_);
  return {ui, -static_cast<std::int64_t>(ui) * v_, n_};
}

std::string AffineMap::to_string() const {
  return "(" + std::to_string(u_) + "," + std::to_string(v_) + ")";
}

DihedralElement aff_apply(const AffineMap& phi, const DihedralElement& g) {
  require_same_modulus(phi.n(), g.n());
  const std::int64_t ue = static_cast<std::int64_t>(phi.u()) * g.exp();
  if (!g.reflect()) return DihedralElement::rotation(ue, g.n());
  return DihedralElement::reflection(ue - phi.v(), g.n());
}

AffineMap aff_compose(const AffineMap& phi1, const AffineMap& phi2) {
  require_same_modulus(phi1.n(), phi2.n());
  const std::int64_t u = static_cast<std::int64_t>(phi1.u()) * phi2.u();
  const std::int64_t v = phi1.v() + static_cast<std::int64_t>(phi1.u()) * phi2.v();
  return {u, v, phi1.n()};
}

std::int64_t gcd_int(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

int inverse_mod(int u, int n) {
  if (n == 1) return 0;
  // extended Euclid
  std::int64_t old_r = mod(u, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw Error(ErrorCode::NonUnit, std::to_string(u) + " mod " + std::to_string(n));
  return mod(old_s, n);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::vector<int> units(int n) {
  std::vector<int> out;
  for (int k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

std::set<int> unit_subgroup(std::span<const int> gens, int n) {
  std::set<int> group{mod(1, n)};
  std::vector<int> reduced;
  for (int g : gens) {
    const int r = mod(g, n);
    if (gcd_int(r, n) != 1) {
      throw Error(ErrorCode::NonUnit, std::to_string(g) + " is not a unit mod " + std::to_string(n));
    }
    reduced.push_back(r);
  }
  std::vector<int> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : reduced) {
        const int y = mod(static_cast<std::int64_t>(x) * g, n);
        if (group.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return group;
}

int gcd_all(int n, std::span<const int> xs) {
  std::int64_t g = n;
  for (int x : xs) g = gcd_int(g, mod(x, n));
  return static_cast<int>(g);
}

}  // namespace dcay
