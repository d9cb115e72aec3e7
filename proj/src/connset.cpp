#include "dcay/connset.hpp"

#include <algorithm>
#include <set>

#include "dcay/error.hpp"

namespace dcay {

std::string case_label(CaseKind kind, int size) {
  switch (kind) {
    case CaseKind::I: return "I";
    case CaseKind::II: return "II";
    case CaseKind::III: return "III";
    case CaseKind::IV: return "IV";
    case CaseKind::V: return "V";
    case CaseKind::RotationsOnly: return "rotations(" + std::to_string(size) + ")";
    case CaseKind::ReflectionsOnly: return "reflections(" + std::to_string(size) + ")";
  }
  return "?";
}

bool ConnectionSet::contains(const DihedralElement& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

std::string ConnectionSet::to_string() const {
  std::string out;
  for (const auto& g : elems_) {
    if (!out.empty()) out += ',';
    out += g.to_string();
  }
  return out;
}

ConnectionSet validate(int n, std::span<const DihedralElement> raw) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "n = " + std::to_string(n) + " (need n >= 3)");
  std::set<DihedralElement> seen;
  for (const auto& g : raw) {
    if (g.n() != n) {
      throw Error(ErrorCode::ModulusMismatch,
                  g.to_string() + " has modulus " + std::to_string(g.n()) + ", expected " +
                      std::to_string(n));
    }
    if (g.is_identity()) throw Error(ErrorCode::IdentityInS, "e must not be in S");
    if (!seen.insert(g).second) throw Error(ErrorCode::DuplicateElement, g.to_string());
  }
  for (const auto& g : seen) {
    const auto inv = dh_inv(g);
    if (!seen.contains(inv)) {
      throw Error(ErrorCode::NotInverseClosed,
                  "inverse of " + g.to_string() + " (" + inv.to_string() + ") missing");
    }
  }
  ConnectionSet cs;
  cs.n_ = n;
  cs.elems_.assign(seen.begin(), seen.end());
  cs.kind_ = classify_census(n, cs.elems_);
  cs.params_ = derive_params(n, cs.elems_);
  return cs;
}

ConnectionSet validate(int n, std::string_view element_list) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "n = " + std::to_string(n) + " (need n >= 3)");
  const auto elems = parse_element_list(element_list, n);
  return validate(n, elems);
}

CaseKind classify_census(int n, std::span<const DihedralElement> elems) {
  int rotations = 0;
  int reflections = 0;
  bool has_half_turn = false;
  for (const auto& g : elems) {
    if (g.reflect()) {
      ++reflections;
    } else {
      ++rotations;
      if (n % 2 == 0 && g.exp() == n / 2) has_half_turn = true;
    }
  }
  const int size = rotations + reflections;
  if (reflections == 0) return size == 4 ? CaseKind::I : CaseKind::RotationsOnly;
  if (rotations == 0) return size == 4 ? CaseKind::II : CaseKind::ReflectionsOnly;
  if (size != 4) {
    throw Error(ErrorCode::MalformedCase, "mixed connection set of size " + std::to_string(size) +
                                              " is outside the classified cases");
  }
  if (rotations == 2) {
    // {r^a, r^-a} with a != 0, n/2
    if (has_half_turn) throw Error(ErrorCode::MalformedCase, "two rotations including r^{n/2}");
    return CaseKind::III;
  }
  if (rotations == 3) {
    if (!has_half_turn) {
      throw Error(ErrorCode::MalformedCase, "three rotations none of which is r^{n/2}");
    }
    return CaseKind::IV;
  }
  // rotations == 1
  if (!has_half_turn) throw Error(ErrorCode::MalformedCase, "single rotation is not r^{n/2}");
  return CaseKind::V;
}

CaseKind classify(const ConnectionSet& cs) { return classify_census(cs.n(), cs.elements()); }

DerivedParams derive_params(int n, std::span<const DihedralElement> elems) {
  DerivedParams p;
  for (const auto& g : elems) {
    (g.reflect() ? p.reflection_exps : p.rotation_exps).push_back(g.exp());
  }
  std::sort(p.rotation_exps.begin(), p.rotation_exps.end());
  std::sort(p.reflection_exps.begin(), p.reflection_exps.end());

  std::set<int> delta;
  std::vector<int> differences;
  const auto& a = p.reflection_exps;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const int diff = mod(a[i] - a[j], n);
      differences.push_back(diff);
      if (diff != 0) {
        delta.insert(diff);
        delta.insert(mod(-diff, n));
      }
    }
  }
  p.delta.assign(delta.begin(), delta.end());

  std::vector<int> gens = p.rotation_exps;
  if (p.rotation_exps.empty() || !p.reflection_exps.empty()) {
    gens.insert(gens.end(), differences.begin(), differences.end());
  }
  p.d = gcd_all(n, gens);
  p.n_prime = n / p.d;
  if (p.reflection_exps.empty()) {
    std::set<int> reduced;
    for (int t : p.rotation_exps) reduced.insert(mod(t / p.d, p.n_prime));
    p.reduced_rotation_exps.assign(reduced.begin(), reduced.end());
  }
  return p;
}

}  // namespace dcay
