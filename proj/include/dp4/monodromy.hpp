#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

/// 2-torsion class on a genus g hyperelliptic curve, written as an even subset S
/// of the 2g+2 branch indices (1-based) modulo complement. The stored subset is
/// the canonical representative: |S| <= g+1, and when |S| = g+1 the one
/// containing index 1.
class TwoTorsionClass {
 public:
  TwoTorsionClass(int genus, const std::vector<int>& subset) : genus_(genus) {
    if (genus < 1) throw input_error("genus must be at least 1");
    const int n = branch_count();
    for (int i : subset) {
      if (i < 1 || i > n) throw input_error("branch index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
      if (!set_.insert(i).second) throw input_error("repeated branch index " + std::to_string(i));
    }
    if (set_.size() % 2 != 0) throw input_error("torsion subset must have even size");
    canonicalize();
  }
  static TwoTorsionClass zero(int genus) { return {genus, {}}; }

  int genus() const { return genus_; }
  int branch_count() const { return 2 * genus_ + 2; }
  const std::set<int>& subset() const { return set_; }
  bool is_zero() const { return set_.empty(); }

  friend TwoTorsionClass operator+(const TwoTorsionClass& a, const TwoTorsionClass& b) {
    if (a.genus_ != b.genus_) throw input_error("torsion classes of different genus");
    std::vector<int> out;
    std::set_symmetric_difference(a.set_.begin(), a.set_.end(), b.set_.begin(), b.set_.end(), std::back_inserter(out));
    return {a.genus_, out};
  }
  /// Image under the permutation sigma of branch indices; sigma[i-1] is the image of i.
  TwoTorsionClass relabel(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != branch_count()) throw input_error("relabeling has wrong length");
    std::vector<int> out;
    for (int i : set_) out.push_back(sigma[static_cast<std::size_t>(i - 1)]);
    return {genus_, out};
  }
  friend bool operator==(const TwoTorsionClass&, const TwoTorsionClass&) = default;
  friend auto operator<=>(const TwoTorsionClass&, const TwoTorsionClass&) = default;

 private:
  void canonicalize() {
    const int n = branch_count();
    const auto size = static_cast<int>(set_.size());
    const bool flip = size > genus_ + 1 || (size == genus_ + 1 && !set_.contains(1));
    if (!flip) return;
    std::set<int> comp;
    for (int i = 1; i <= n; ++i)
      if (!set_.contains(i)) comp.insert(i);
    set_ = std::move(comp);
  }
  int genus_;
  std::set<int> set_;
};

/// Orbit index n = |S|/2 of the canonical representative.
inline int torsion_orbit_label(const TwoTorsionClass& c) { return static_cast<int>(c.subset().size()) / 2; }

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Sizes of the S_{2g+2}-orbits on 2-torsion classes, indexed by n = 0..floor((g+1)/2).
inline std::vector<std::uint64_t> orbit_sizes(int g) {
  if (g < 1) throw input_error("genus must be at least 1");
  std::vector<std::uint64_t> out{1};
  for (int n = 1; 2 * n <= g + 1; ++n) {
    std::uint64_t c = binomial(2 * g + 2, 2 * n);
    out.push_back(2 * n == g + 1 ? c / 2 : c);
  }
  return out;
}

/// Every 2-torsion class of genus g, by canonical representative.
inline std::vector<TwoTorsionClass> all_torsion_classes(int g) {
  if (g < 1 || g > 12) throw input_error("enumeration supports genus 1..12");
  const int n = 2 * g + 2;
  std::set<TwoTorsionClass> seen;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1U << i)) s.push_back(i + 1);
    seen.insert(TwoTorsionClass(g, s));
  }
  return {seen.begin(), seen.end()};
}

enum class ComponentLabel { empty, s5_only, w_component_a, w_component_b, w_single };

inline std::string to_string(ComponentLabel l) {
  switch (l) {
    case ComponentLabel::empty: return "empty";
    case ComponentLabel::s5_only: return "S5-only";
    case ComponentLabel::w_component_a: return "W-component-A";
    case ComponentLabel::w_component_b: return "W-component-B";
    case ComponentLabel::w_single: return "W-single";
  }
  return "?";
}

/// Component of general families of height h. The datum is the orbit label n
/// for h = 8, the theta quadratic form value q (or -1 for the zero class) for
/// h = 10, and 0/1 for absence/presence of nonzero torsion when h >= 12.
/// For h = 10, q = 0 is labelled A and q = 1 is labelled B.
inline ComponentLabel classify_component(int h, int datum) {
  if (h < 0 || h % 2 != 0) throw input_error("height must be even and non-negative, got " + std::to_string(h));
  if (h <= 6) return ComponentLabel::empty;
  if (h == 8) {
    switch (datum) {
      case 0: return ComponentLabel::s5_only;
      case 1: return ComponentLabel::w_component_a;
      case 2: return ComponentLabel::w_component_b;
      default: throw input_error("orbit label for height 8 must be 0, 1 or 2");
    }
  }
  if (h == 10) {
    switch (datum) {
      case -1: return ComponentLabel::s5_only;
      case 0: return ComponentLabel::w_component_a;
      case 1: return ComponentLabel::w_component_b;
      default: throw input_error("theta datum for height 10 must be -1 (zero class), 0 or 1");
    }
  }
  if (datum != 0 && datum != 1) throw input_error("torsion datum for height >= 12 must be 0 or 1");
  return datum == 1 ? ComponentLabel::w_single : ComponentLabel::s5_only;
}

/// Height 8 classification straight from a genus 4 torsion class.
inline ComponentLabel classify_component(int h, const TwoTorsionClass& c) {
  if (h == 8) {
    if (c.genus() != 4) throw input_error("height 8 spectral curves have genus 4");
    return classify_component(h, torsion_orbit_label(c));
  }
  if (h == 10) throw input_error("height 10 needs a theta value, not a hyperelliptic class");
  return classify_component(h, c.is_zero() ? 0 : 1);
}

}  // namespace dp4
