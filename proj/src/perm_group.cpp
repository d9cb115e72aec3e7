#include "dcay/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dcay/dihedral.hpp"
#include "dcay/error.hpp"

namespace dcay {

// ---- Permutation ----

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) {
      throw Error(ErrorCode::InvalidArgument, "image array is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= degree) throw Error(ErrorCode::PointOutOfRange, "cycle point");
      images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const { return first_moved() < 0; }

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::first_moved() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g * *this * g.inverse(); }

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    for (int x = i; !done[x]; x = images_[x]) {
      if (x != i) out += ' ';
      out += std::to_string(x);
      done[x] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "composing permutations");
  std::vector<int> images(a.degree());
  for (int x = 0; x < a.degree(); ++x) images[x] = a(b(x));
  return Permutation(std::move(images));
}

// ---- PermGroup ----

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    check_degree(g);
    if (!g.is_identity() &&
        std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
      generators_.push_back(std::move(g));
    }
  }
  for (int b : base_prefix) {
    if (b < 0 || b >= degree_) throw Error(ErrorCode::PointOutOfRange, "base point");
  }
  schreier_sims(base_prefix);
  order_ = 1;
  for (const auto& level : levels_) order_ *= static_cast<unsigned>(level.orbit.size());
}

void PermGroup::check_degree(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "permutation of degree " + std::to_string(p.degree()) +
                                               " in group of degree " + std::to_string(degree_));
  }
}

PermGroup::Level PermGroup::make_level(int base_point) const {
  Level level;
  level.base_point = base_point;
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[base_point] = Permutation(degree_);
  level.orbit.push_back(base_point);
  return level;
}

void PermGroup::extend_orbit(Level& level) const {
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const int x = level.orbit[i];
    for (const auto& s : level.gens) {
      const int y = s(x);
      if (!level.transversal[y]) {
        level.transversal[y] = s * *level.transversal[x];
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation h, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const auto& level = levels_[i];
    const int x = h(level.base_point);
    if (!level.transversal[x]) return {std::move(h), i};
    h = level.transversal[x]->inverse() * h;
  }
  return {std::move(h), levels_.size()};
}

void PermGroup::schreier_sims(const std::vector<int>& base_prefix) {
  std::vector<int> base;
  for (int b : base_prefix) {
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  for (const auto& g : generators_) {
    const bool fixes_base =
        std::all_of(base.begin(), base.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) base.push_back(g.first_moved());
  }
  // a base never exceeds the degree, so references into levels_ stay valid
  levels_.reserve(static_cast<std::size_t>(degree_) + 1);
  for (int b : base) levels_.push_back(make_level(b));
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t m = 0; m < l; ++m) fixes_prefix = fixes_prefix && g(levels_[m].base_point) == levels_[m].base_point;
      if (fixes_prefix) levels_[l].gens.push_back(g);
    }
    extend_orbit(levels_[l]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level& level = levels_[i];
    for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
      if (level.checked.size() <= oi) level.checked.resize(oi + 1);
      auto& row = level.checked[oi];
      if (row.size() < level.gens.size()) row.resize(level.gens.size(), 0);
      for (std::size_t si = 0; !extended && si < level.gens.size(); ++si) {
        if (row[si]) continue;
        row[si] = 1;
        const int x = level.orbit[oi];
        const Permutation& s = level.gens[si];
        const Permutation schreier = level.transversal[s(x)]->inverse() * s * *level.transversal[x];
        auto [residue, stop] = sift(schreier, static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) levels_.push_back(make_level(residue.first_moved()));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          extend_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<int> PermGroup::fundamental_orbit_sizes() const {
  std::vector<int> out;
  for (const auto& level : levels_) out.push_back(static_cast<int>(level.orbit.size()));
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  check_degree(p);
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<int> PermGroup::orbit(int x) const {
  if (x < 0 || x >= degree_) {
    throw Error(ErrorCode::PointOutOfRange, "point " + std::to_string(x));
  }
  return orbit_of(generators_, degree_, x);
}

PermGroup PermGroup::stabilizer(int x) const {
  if (x < 0 || x >= degree_) {
    throw Error(ErrorCode::PointOutOfRange, "point " + std::to_string(x));
  }
  const PermGroup rebased(degree_, generators_, {x});
  if (rebased.levels_.size() < 2) return PermGroup(degree_, {});
  return PermGroup(degree_, rebased.levels_[1].gens);
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || static_cast<int>(orbit(0).size()) == degree_;
}

std::optional<std::vector<Permutation>> PermGroup::elements(std::size_t limit) const {
  if (order_ > limit) return std::nullopt;
  std::vector<Permutation> out{Permutation(degree_)};
  // g = u0 * u1 * ... ; expand from the deepest level outwards
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->orbit.size());
    for (int x : it->orbit) {
      for (const auto& tail : out) next.push_back(*it->transversal[x] * tail);
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> orbit_of(std::span<const Permutation> generators, int degree, int x) {
  std::vector<char> seen(degree, 0);
  std::vector<int> orbit{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators) {
      const int y = g(orbit[i]);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_two_transitive(const PermGroup& g) {
  if (g.degree() < 2) return false;
  if (!g.is_transitive()) return false;
  const PermGroup stab = g.stabilizer(0);
  return static_cast<int>(stab.orbit(1).size()) == g.degree() - 1;
}

NormalityResult is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (n.degree() != g.degree()) throw Error(ErrorCode::DegreeMismatch, "normality test");
  for (const auto& x : n.generators()) {
    if (!g.contains(x)) {
      throw Error(ErrorCode::NotASubgroup, "generator " + x.cycle_string() + " not in G");
    }
  }
  for (const auto& conj : g.generators()) {
    for (const auto& x : n.generators()) {
      Permutation c = x.conjugate_by(conj);
      if (!n.contains(c)) {
        NormalityResult r;
        r.normal = false;
        r.witness = c;
        r.conjugator = conj;
        r.conjugated = x;
        return r;
      }
    }
  }
  return {};
}

std::string_view tristate_name(Tristate t) {
  switch (t) {
    case Tristate::No: return "no";
    case Tristate::Yes: return "yes";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

Tristate is_internal_semidirect(const PermGroup& n, const PermGroup& q, const PermGroup& g,
                                std::size_t element_limit) {
  for (const auto* sub : {&n, &q}) {
    for (const auto& x : sub->generators()) {
      if (!g.contains(x)) throw Error(ErrorCode::NotASubgroup, x.cycle_string() + " not in G");
    }
  }
  if (!is_normal_in(n, g).normal) return Tristate::No;
  if (n.order() * q.order() != g.order()) return Tristate::No;
  const bool q_smaller = q.order() <= n.order();
  const PermGroup& small = q_smaller ? q : n;
  const PermGroup& large = q_smaller ? n : q;
  const auto elems = small.elements(element_limit);
  if (!elems) return Tristate::Unknown;
  for (const auto& x : *elems) {
    if (!x.is_identity() && large.contains(x)) return Tristate::No;
  }
  return Tristate::Yes;
}

std::vector<Permutation> right_regular_elements(int n) {
  std::vector<Permutation> out;
  for (int gi = 0; gi < 2 * n; ++gi) {
    const auto g = DihedralElement::from_index(gi, n);
    std::vector<int> images(2 * n);
    for (int xi = 0; xi < 2 * n; ++xi) {
      images[xi] = dh_mul(DihedralElement::from_index(xi, n), g).index();
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

PermGroup right_regular(int n) {
  const auto all = right_regular_elements(n);
  // rho_r is index 1 (r^1), rho_s is index n (s r^0)
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(all[1]);
  gens.push_back(all[n]);
  return PermGroup(2 * n, gens);
}

std::vector<Permutation> left_regular_elements(int n) {
  std::vector<Permutation> out;
  for (int gi = 0; gi < 2 * n; ++gi) {
    const auto g = DihedralElement::from_index(gi, n);
    std::vector<int> images(2 * n);
    for (int xi = 0; xi < 2 * n; ++xi) {
      images[xi] = dh_mul(g, DihedralElement::from_index(xi, n)).index();
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

PermGroup left_regular(int n) {
  const auto all = left_regular_elements(n);
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(all[1]);
  gens.push_back(all[n]);
  return PermGroup(2 * n, gens);
}

Permutation inversion_map(int n) {
  std::vector<int> images(2 * n);
  for (int xi = 0; xi < 2 * n; ++xi) images[xi] = dh_inv(DihedralElement::from_index(xi, n)).index();
  return Permutation(std::move(images));
}

}  // namespace dcay
