#pragma once

#include <span>
#include <string>
#include <vector>

#include "dcay/dihedral.hpp"

namespace dcay {

/// The five shapes of a 4-element connection set, plus the all-rotation and
/// all-reflection families of other sizes.
enum class CaseKind { I, II, III, IV, V, RotationsOnly, ReflectionsOnly };

/// Short label: "I" .. "V", "rotations(k)", "reflections(k)" with k = |S|.
std::string case_label(CaseKind kind, int size);

struct DerivedParams {
  std::vector<int> rotation_exps;    // T, ascending, symmetric mod n
  std::vector<int> reflection_exps;  // A, ascending
  std::vector<int> delta;            // {+-(a_i - a_j) : i < j} \ {0}, ascending
  int d = 0;                         // connectivity gcd, see derive_params
  int n_prime = 0;                   // n / d
  std::vector<int> reduced_rotation_exps;  // T / d inside Z_{n'} (rotation sets only)
};

/// A validated inverse-closed subset of D_2n \ {e}. Built only by validate().
class ConnectionSet {
 public:
  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  /// Sorted: rotations by exponent, then reflections by exponent.
  const std::vector<DihedralElement>& elements() const noexcept { return elems_; }
  CaseKind kind() const noexcept { return kind_; }
  std::string label() const { return case_label(kind_, size()); }
  const DerivedParams& params() const noexcept { return params_; }

  const std::vector<int>& T() const noexcept { return params_.rotation_exps; }
  const std::vector<int>& A() const noexcept { return params_.reflection_exps; }
  const std::vector<int>& delta() const noexcept { return params_.delta; }
  int d() const noexcept { return params_.d; }

  bool contains(const DihedralElement& g) const;
  int rotation_count() const { return static_cast<int>(params_.rotation_exps.size()); }
  int reflection_count() const { return static_cast<int>(params_.reflection_exps.size()); }

  /// "r^1,r^6,s*r^0,s*r^3"
  std::string to_string() const;

 private:
  friend ConnectionSet validate(int n, std::span<const DihedralElement> raw);
  int n_ = 0;
  std::vector<DihedralElement> elems_;
  CaseKind kind_ = CaseKind::I;
  DerivedParams params_;
};

/// Checks n >= 3, common modulus, e not in S, no duplicates and S = S^-1,
/// then classifies and derives parameters.
ConnectionSet validate(int n, std::span<const DihedralElement> raw);
ConnectionSet validate(int n, std::string_view element_list);

/// Recomputes the case from the element census. Throws MalformedCase for
/// censuses that no inverse-closed set can have, and for mixed sets whose
/// size is not 4.
CaseKind classify(const ConnectionSet& cs);
CaseKind classify_census(int n, std::span<const DihedralElement> elems);

/// T, A, Delta and d. Rotation-only sets use gcd(n, T); reflection-only sets use
/// gcd(n, a_i - a_j); mixed sets use both (diagnostic only).
DerivedParams derive_params(int n, std::span<const DihedralElement> elems);

}  // namespace dcay
