#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

/// Sparse polynomial over the rationals in a fixed number of variables.
/// Terms are keyed by exponent vectors; zero coefficients are never stored.
class MPoly {
 public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT: constants convert implicitly
  MPoly(const Rational& c) {             // NOLINT
    if (!dp4::is_zero(c)) terms_[{}] = c;
  }

  /// The variable x_index in a ring of nvars variables.
  static MPoly variable(std::size_t index, std::size_t nvars) {
    Exponents e(nvars, 0);
    e[index] = 1;
    MPoly p;
    p.add_term(std::move(e), 1);
    return p;
  }

  /// c * x^e.
  static MPoly monomial(Exponents e, const Rational& c) {
    MPoly p;
    p.add_term(std::move(e), c);
    return p;
  }

  /// Partial derivative with respect to x_index.
  MPoly derivative(std::size_t index) const {
    MPoly out;
    for (const auto& [e, c] : terms_) {
      if (index >= e.size() || e[index] == 0) continue;
      Exponents f = e;
      --f[index];
      out.add_term(std::move(f), c * e[index]);
    }
    return out;
  }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return a * Rational(-1); }
  friend MPoly operator*(const MPoly& a, const Rational& s) {
    MPoly r;
    if (dp4::is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
    return r;
  }
  friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(std::span<const Rational> point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t *= pow(point[i], e[i]);
      acc += t;
    }
    return acc;
  }

  /// Replaces variable `index` by the polynomial `value`.
  MPoly substitute(std::size_t index, const MPoly& value) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      int k = 0;
      if (index < rest.size()) {
        k = rest[index];
        rest[index] = 0;
      }
      MPoly term;
      term.add_term(rest, c);
      for (int i = 0; i < k; ++i) term *= value;
      r += term;
    }
    return r;
  }

  /// The rational c for which this / c has coprime integer coefficients
  /// and a positive first stored term.
  Rational content() const {
    if (terms_.empty()) return 0;
    Integer num = 0, den = 1;
    for (const auto& [e, c] : terms_) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational g = make_rational(num, den);
    if (sgn(terms_.begin()->second) < 0) g = -g;
    return g;
  }

  std::string to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) s += "-";
      Rational a = abs(c);
      bool constant = true;
      for (int v : e)
        if (v) constant = false;
      if (a != 1 || constant) s += dp4::to_string(a) + (constant ? "" : "*");
      bool first = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!first) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
        first = false;
      }
    }
    return s;
  }

 private:
  static Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
  }
  void add_term(Exponents e, const Rational& c) {
    if (dp4::is_zero(c)) return;
    while (!e.empty() && e.back() == 0) e.pop_back();
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (dp4::is_zero(it->second)) terms_.erase(it);
    }
  }
  std::map<Exponents, Rational> terms_;
};

}  // namespace dp4
