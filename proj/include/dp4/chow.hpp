#pragma once

#include <map>
#include <utility>

#include "dp4/mpoly.hpp"

namespace dp4 {

/// Classes on a P^4-bundle over P^1, written sum f^a H^b * coefficient with
/// a in {0,1}; coefficients are polynomials in the bundle parameters.
class ChowClass {
 public:
  ChowClass() = default;
  static ChowClass monomial(int fiber, int hyperplane, const MPoly& coefficient) {
    ChowClass c;
    if (fiber <= 1 && !coefficient.is_zero()) c.parts_[{fiber, hyperplane}] = coefficient;
    return c;
  }

  const std::map<std::pair<int, int>, MPoly>& parts() const { return parts_; }

  friend ChowClass operator+(ChowClass a, const ChowClass& b) {
    for (const auto& [k, v] : b.parts_) a.accumulate(k, v);
    return a;
  }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    ChowClass r;
    for (const auto& [ka, va] : a.parts_)
      for (const auto& [kb, vb] : b.parts_)
        if (ka.first + kb.first <= 1) r.accumulate({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  }

  /// Degree on the 5-dimensional total space, using f^2 = 0,
  /// H^5 = c1 H^4 f and H^4 f = 1.
  MPoly integrate(const MPoly& c1) const {
    MPoly out;
    for (const auto& [k, v] : parts_) {
      if (k.first + k.second != 5) throw input_error("integrating a class that is not top-dimensional");
      out += k.first == 1 ? v : v * c1;
    }
    return out;
  }

 private:
  void accumulate(const std::pair<int, int>& k, const MPoly& v) {
    MPoly& slot = parts_[k];
    slot += v;
    if (slot.is_zero()) parts_.erase(k);
  }
  std::map<std::pair<int, int>, MPoly> parts_;
};

}  // namespace dp4
