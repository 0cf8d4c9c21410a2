#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward. The zero polynomial has no coefficients and
/// degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> low_to_high) : c_(std::move(low_to_high)) { trim(); }
  UPoly(std::initializer_list<long> low_to_high) {
    for (long v : low_to_high) c_.emplace_back(v);
    trim();
  }

  static UPoly constant(const Rational& v) { return UPoly(std::vector<Rational>{v}); }
  static UPoly monomial(const Rational& v, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = v;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i < 0 || i > degree()) ? Rational(0) : c_[static_cast<std::size_t>(i)];
  }
  Rational lead() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    Rational l = lead();
    for (auto& v : r.c_) v /= l;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const Rational& s) {
    if (dp4::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (dp4::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder over the rationals.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rational> rem = a.c_, quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational lb = b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lb;
      quo[static_cast<std::size_t>(k)] = q;
      if (dp4::is_zero(q)) continue;
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(b.degree()));
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  /// Substitutes x -> x + shift.
  UPoly taylor_shift(const Rational& shift) const {
    std::vector<Rational> a = c_;
    const int n = degree();
    for (int i = 0; i < n; ++i)
      for (int j = n - 1; j >= i; --j)
        a[static_cast<std::size_t>(j)] += shift * a[static_cast<std::size_t>(j + 1)];
    return UPoly(std::move(a));
  }

  /// Substitutes x -> scale * x.
  UPoly scale_variable(const Rational& scale) const {
    std::vector<Rational> a = c_;
    Rational p = 1;
    for (auto& v : a) {
      v *= p;
      p *= scale;
    }
    return UPoly(std::move(a));
  }

  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const {
    if (is_zero()) return *this;
    Integer den = 1, g = 0;
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& v : c_) {
      Rational w = v * den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_num_mpz_t());
      out.push_back(w);
    }
    if (sgn(out.back()) < 0) g = -g;
    for (auto& v : out) v /= g;
    return UPoly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && dp4::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both arguments vanish).
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<UPoly, UPoly, UPoly> extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational l = r0.lead();
  Rational inv = Rational(1) / l;
  return {r0 * inv, s0 * inv, t0 * inv};
}

inline UPoly pow(const UPoly& p, int e) {
  UPoly r = UPoly::constant(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

/// Resultant via the Euclidean remainder sequence over the rationals.
inline Rational resultant(UPoly a, UPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rational res = 1;
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return res * pow(b.lead(), da);
    if (da == 0) return res * pow(a.lead(), db);
    if (da < db) {
      if ((da * db) % 2) res = -res;
      std::swap(a, b);
      continue;
    }
    UPoly r = a % b;
    if (r.is_zero()) return 0;
    if ((da * db) % 2) res = -res;
    res *= pow(b.lead(), da - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

/// Square-free decomposition (Yun): monic factors paired with multiplicity.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f / a, c = fp / a;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  return out;
}

/// Interpolating polynomial through (xs[i], ys[i]); xs pairwise distinct.
inline UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  UPoly r = UPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) r = r * UPoly(std::vector<Rational>{-xs[i], 1}) + UPoly::constant(dd[i]);
  return r;
}

}  // namespace dp4
