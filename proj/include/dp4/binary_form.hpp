#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dp4/matrix.hpp"
#include "dp4/rational.hpp"
#include "dp4/upoly.hpp"

namespace dp4 {

/// Homogeneous form of degree d in (x, y); coeffs()[i] multiplies
/// x^(d-i) y^i. The coefficient ring T only needs ring operations and
/// multiplication by a Rational, so the same template carries numeric
/// forms and forms with symbolic coefficients.
template <typename T>
class BasicBinaryForm {
 public:
  BasicBinaryForm() = default;
  explicit BasicBinaryForm(int degree) : d_(degree), c_(static_cast<std::size_t>(degree) + 1) {
    if (degree < 0) throw input_error("negative form degree");
  }
  BasicBinaryForm(int degree, std::vector<T> coeffs) : d_(degree), c_(std::move(coeffs)) {
    if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
      throw input_error("binary form needs degree+1 coefficients");
  }

  int degree() const { return d_; }
  const std::vector<T>& coeffs() const { return c_; }
  T& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const T& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!(v == T(0))) return false;
    return true;
  }

  /// d/dx
  BasicBinaryForm dx() const {
    if (d_ == 0) return BasicBinaryForm(0);
    BasicBinaryForm r(d_ - 1);
    for (int i = 0; i < d_; ++i) r[i] = c_[static_cast<std::size_t>(i)] * Rational(d_ - i);
    return r;
  }
  /// d/dy
  BasicBinaryForm dy() const {
    if (d_ == 0) return BasicBinaryForm(0);
    BasicBinaryForm r(d_ - 1);
    for (int i = 1; i <= d_; ++i) r[i - 1] = c_[static_cast<std::size_t>(i)] * Rational(i);
    return r;
  }

  BasicBinaryForm& operator+=(const BasicBinaryForm& o) {
    if (o.d_ != d_) throw input_error("adding forms of different degree");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  BasicBinaryForm& operator-=(const BasicBinaryForm& o) {
    if (o.d_ != d_) throw input_error("subtracting forms of different degree");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  BasicBinaryForm& operator*=(const Rational& s) {
    for (auto& v : c_) v = v * s;
    return *this;
  }
  friend BasicBinaryForm operator+(BasicBinaryForm a, const BasicBinaryForm& b) { return a += b; }
  friend BasicBinaryForm operator-(BasicBinaryForm a, const BasicBinaryForm& b) { return a -= b; }
  friend BasicBinaryForm operator*(BasicBinaryForm a, const Rational& s) { return a *= s; }
  friend BasicBinaryForm operator*(const Rational& s, BasicBinaryForm a) { return a *= s; }
  friend BasicBinaryForm operator*(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    BasicBinaryForm r(a.d_ + b.d_);
    for (int i = 0; i <= a.d_; ++i)
      for (int j = 0; j <= b.d_; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
  }
  friend bool operator==(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
  }

 private:
  int d_ = 0;
  std::vector<T> c_{T(0)};
};

using BinaryForm = BasicBinaryForm<Rational>;

inline BinaryForm make_form(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  const int d = static_cast<int>(c.size()) - 1;
  return BinaryForm(d, std::move(c));
}

/// Linear form a x + b y.
inline BinaryForm linear_form(const Rational& a, const Rational& b) { return BinaryForm(1, {a, b}); }

/// Product of linear factors (x - r_i y).
inline BinaryForm form_from_roots(const std::vector<Rational>& roots) {
  BinaryForm f = make_form({1});
  for (const auto& r : roots) f = f * linear_form(1, -r);
  return f;
}

inline Rational evaluate(const BinaryForm& f, const Rational& x, const Rational& y) {
  Rational acc = 0, xp = 1;
  std::vector<Rational> ypow(static_cast<std::size_t>(f.degree()) + 1);
  ypow[0] = 1;
  for (int i = 1; i <= f.degree(); ++i) ypow[static_cast<std::size_t>(i)] = ypow[static_cast<std::size_t>(i) - 1] * y;
  for (int i = f.degree(); i >= 0; --i) {
    acc += f[i] * xp * ypow[static_cast<std::size_t>(i)];
    xp *= x;
  }
  return acc;
}

/// 2x2 substitution matrix acting on the column (x, y):
/// x -> g00 x + g01 y, y -> g10 x + g11 y.
using Mobius = std::array<std::array<Rational, 2>, 2>;

inline Mobius mobius(long a, long b, long c, long d) {
  return Mobius{{{Rational(a), Rational(b)}, {Rational(c), Rational(d)}}};
}

inline Rational det(const Mobius& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

inline Mobius compose(const Mobius& g, const Mobius& h) {
  Mobius r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = g[i][0] * h[0][j] + g[i][1] * h[1][j];
  return r;
}

/// f(g (x, y)). A right action: f∘(gh) = (f∘g)∘h.
template <typename T>
BasicBinaryForm<T> mobius_substitute(const BasicBinaryForm<T>& f, const Mobius& g) {
  if (is_zero(det(g))) throw input_error("non-invertible substitution");
  const int d = f.degree();
  // L1 = g00 x + g01 y, L2 = g10 x + g11 y
  std::vector<BinaryForm> p1(static_cast<std::size_t>(d) + 1), p2(static_cast<std::size_t>(d) + 1);
  p1[0] = p2[0] = make_form({1});
  const BinaryForm l1 = linear_form(g[0][0], g[0][1]), l2 = linear_form(g[1][0], g[1][1]);
  for (int i = 1; i <= d; ++i) {
    p1[static_cast<std::size_t>(i)] = p1[static_cast<std::size_t>(i) - 1] * l1;
    p2[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(i) - 1] * l2;
  }
  BasicBinaryForm<T> out(d);
  for (int i = 0; i <= d; ++i) {
    const BinaryForm term = p1[static_cast<std::size_t>(d - i)] * p2[static_cast<std::size_t>(i)];
    for (int k = 0; k <= d; ++k)
      if (!is_zero(term[k])) out[k] = out[k] + f[i] * term[k];
  }
  return out;
}

/// Dehomogenize at y = 1 as a polynomial in x.
inline UPoly dehomogenize(const BinaryForm& f) {
  std::vector<Rational> c(f.coeffs().rbegin(), f.coeffs().rend());
  return UPoly(std::move(c));
}

/// Homogenize a polynomial in x to a form of the given degree.
inline BinaryForm homogenize(const UPoly& p, int degree) {
  if (p.degree() > degree) throw input_error("polynomial degree exceeds form degree");
  BinaryForm f(degree);
  for (int i = 0; i <= p.degree(); ++i) f[degree - i] = p.coeff(i);
  return f;
}

namespace detail {
/// A shear x -> x, y -> c x + y (determinant one) making the x^d
/// coefficient of every given form nonzero.
inline Mobius nonvanishing_shear(std::initializer_list<const BinaryForm*> forms) {
  for (long c = 0;; c = (c <= 0 ? 1 - c : -c)) {
    bool ok = true;
    for (const auto* f : forms)
      if (is_zero(evaluate(*f, 1, Rational(c)))) ok = false;
    if (ok) return mobius(1, 0, c, 1);
  }
}
}  // namespace detail

/// Homogeneous resultant: a0^n b0^m prod (r_i - s_j) for the roots of the
/// dehomogenized forms. Zero forms give zero.
inline Rational resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() == 0) return pow(f[0], g.degree());
  if (g.degree() == 0) return pow(g[0], f.degree());
  if (!is_zero(f[0]) && !is_zero(g[0])) return resultant(dehomogenize(f), dehomogenize(g));
  const Mobius s = detail::nonvanishing_shear({&f, &g});
  return resultant(dehomogenize(mobius_substitute(f, s)), dehomogenize(mobius_substitute(g, s)));
}

/// Discriminant normalized so that a monic split form gives the product of
/// squared root differences; disc(f∘g) = det(g)^(d(d-1)) disc(f).
inline Rational discriminant(const BinaryForm& f) {
  const int d = f.degree();
  if (d < 2) throw input_error("discriminant needs degree >= 2");
  if (f.is_zero()) return 0;
  BinaryForm h = f;
  if (is_zero(h[0])) h = mobius_substitute(f, detail::nonvanishing_shear({&f}));
  const UPoly p = dehomogenize(h);
  Rational r = resultant(p, p.derivative()) / h[0];
  if ((d * (d - 1) / 2) % 2) r = -r;
  return r;
}

struct FormFactor {
  BinaryForm factor;
  int multiplicity;
};

/// Square-free decomposition of a binary form: pairwise coprime square-free
/// factors with multiplicities whose product is f up to a rational unit. A
/// root at infinity appears as the factor y.
inline std::vector<FormFactor> squarefree_profile(const BinaryForm& f) {
  if (f.is_zero()) throw input_error("square-free profile of the zero form");
  std::vector<FormFactor> out;
  const UPoly p = dehomogenize(f);
  const int at_infinity = f.degree() - p.degree();
  for (const auto& [g, m] : squarefree_decomposition(p)) out.push_back({homogenize(g, g.degree()), m});
  if (at_infinity > 0) out.push_back({linear_form(0, 1), at_infinity});
  return out;
}

/// Product of factors^multiplicities.
inline BinaryForm expand_profile(const std::vector<FormFactor>& profile) {
  BinaryForm r = make_form({1});
  for (const auto& [g, m] : profile)
    for (int i = 0; i < m; ++i) r = r * g;
  return r;
}

/// Whether a and b agree up to a nonzero rational scalar.
inline bool proportional(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return false;
  Rational ratio = 0;
  for (int i = 0; i <= a.degree(); ++i) {
    if (is_zero(a[i]) != is_zero(b[i])) return false;
    if (is_zero(a[i])) continue;
    if (is_zero(ratio)) ratio = a[i] / b[i];
    else if (a[i] != ratio * b[i]) return false;
  }
  return true;
}

inline BinaryForm random_form(std::mt19937_64& rng, int degree, long bound = 9) {
  BinaryForm f(degree);
  for (int i = 0; i <= degree; ++i) f[i] = random_small_rational(rng, bound);
  return f;
}

inline Mobius random_mobius(std::mt19937_64& rng, long bound = 5) {
  while (true) {
    Mobius g{{{random_small_rational(rng, bound), random_small_rational(rng, bound)},
              {random_small_rational(rng, bound), random_small_rational(rng, bound)}}};
    if (!is_zero(det(g))) return g;
  }
}

/// Random integer matrix of determinant one (product of elementary shears).
inline Mobius random_unimodular(std::mt19937_64& rng) {
  Mobius g = mobius(1, 0, 0, 1);
  for (int k = 0; k < 3; ++k) {
    g = compose(g, mobius(1, random_int(rng, -3, 3), 0, 1));
    g = compose(g, mobius(1, 0, random_int(rng, -3, 3), 1));
  }
  return g;
}

}  // namespace dp4
