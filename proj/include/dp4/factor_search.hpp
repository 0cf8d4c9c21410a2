#pragma once

#include <optional>
#include <vector>

#include "dp4/biform.hpp"
#include "dp4/factor.hpp"

namespace dp4 {

namespace detail {

/// Polynomial in u with coefficients in Q[s]; entry i multiplies u^i.
using SUPoly = std::vector<UPoly>;

inline int u_degree(const SUPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (!a[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

/// Exact quotient a / g in Q[s][u], or nothing if g does not divide a.
inline std::optional<SUPoly> divide_exact(SUPoly a, const SUPoly& g) {
  const int dg = u_degree(g), da = u_degree(a);
  if (dg < 0) return std::nullopt;
  if (da < dg) {
    if (da < 0) return SUPoly{};
    return std::nullopt;
  }
  const UPoly& lc = g[static_cast<std::size_t>(dg)];
  SUPoly q(static_cast<std::size_t>(da - dg) + 1);
  for (int k = da - dg; k >= 0; --k) {
    auto [quo, rem] = divmod(a[static_cast<std::size_t>(k + dg)], lc);
    if (!rem.is_zero()) return std::nullopt;
    q[static_cast<std::size_t>(k)] = quo;
    if (quo.is_zero()) continue;
    for (int j = 0; j <= dg; ++j) a[static_cast<std::size_t>(k + j)] -= quo * g[static_cast<std::size_t>(j)];
  }
  for (const auto& c : a)
    if (!c.is_zero()) return std::nullopt;
  return q;
}

inline UPoly truncate(const UPoly& p, int precision) {
  std::vector<Rational> c;
  for (int i = 0; i < precision && i <= p.degree(); ++i) c.push_back(p.coeff(i));
  return UPoly(std::move(c));
}

/// Power-series inverse of p (p(0) != 0) to the given number of terms.
inline UPoly series_inverse(const UPoly& p, int precision) {
  std::vector<Rational> inv(static_cast<std::size_t>(precision));
  const Rational c0 = Rational(1) / p.coeff(0);
  for (int k = 0; k < precision; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (int i = 1; i <= k; ++i) acc -= p.coeff(i) * inv[static_cast<std::size_t>(k - i)];
    inv[static_cast<std::size_t>(k)] = acc * c0;
  }
  return UPoly(std::move(inv));
}

/// Monic factorization f = g h in Q[[σ]][u] lifted from f(0) = g0 h0,
/// returned as the σ-coefficients (each a polynomial in u) of g.
inline std::vector<UPoly> hensel_lift_series(const std::vector<UPoly>& f, const UPoly& g0, const UPoly& h0,
                                             int precision) {
  const auto [one, s, t] = extended_gcd(g0, h0);
  if (one.degree() != 0) throw consistency_error("fiber factors not coprime");
  std::vector<UPoly> g{g0}, h{h0};
  for (int k = 1; k < precision; ++k) {
    UPoly e = k < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(k)] : UPoly{};
    for (int a = 0; a <= k; ++a) {
      const int b = k - a;
      if (a >= static_cast<int>(g.size()) || b >= static_cast<int>(h.size())) continue;
      e -= g[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(b)];
    }
    g.push_back((t * e) % g0);
    h.push_back((s * e) % h0);
  }
  return g;
}

inline BiForm homogenize_factor(const SUPoly& g, int twist) {
  const int k = u_degree(g);
  bool first = true;
  int m = 0;
  for (int j = 0; j <= k; ++j) {
    const UPoly& c = g[static_cast<std::size_t>(k - j)];
    if (c.is_zero()) continue;
    const int w = c.degree() - j * twist;
    if (first || w > m) m = w;
    first = false;
  }
  std::vector<BinaryForm> rows;
  for (int j = 0; j <= k; ++j) {
    const UPoly& c = g[static_cast<std::size_t>(k - j)];
    const int d = m + j * twist;
    rows.push_back(d < 0 ? BinaryForm(0) : homogenize(c, d));
  }
  return BiForm(m, k, twist, std::move(rows));
}

}  // namespace detail

/// Searches for a factor of F over the rationals whose (u,v)-degree is at
/// most `bound`. Factors of (u,v)-degree zero (content in (s,t)) are
/// returned first. The search lifts the factorization of a square-free
/// fiber F(s0,1;u,1) to Q[[s - s0]] and clears denominators with the
/// leading coefficient in u; every candidate is confirmed by exact
/// division, and the homogenized pair is checked to multiply back to F.
/// Throws input_error when no square-free fiber exists (F has a repeated
/// factor).
inline std::optional<BiForm> factor_search_bounded(const BiForm& F, int bound) {
  using detail::SUPoly;
  if (F.is_zero()) throw input_error("factor search on the zero form");
  if (bound < 1 || bound > 2) throw input_error("factor search bound must be 1 or 2");
  const int n = F.n();

  SUPoly a(static_cast<std::size_t>(n) + 1);
  int t_power = -1;
  UPoly content;
  for (int j = 0; j <= n; ++j) {
    if (F.row(j).is_zero()) continue;
    const UPoly c = dehomogenize(F.row(j));
    a[static_cast<std::size_t>(n - j)] = c;
    const int drop = F.row_degree(j) - c.degree();
    t_power = t_power < 0 ? drop : std::min(t_power, drop);
    content = content.is_zero() ? c.monic() : gcd(content, c);
  }
  if (content.degree() >= 1 || t_power >= 1) {
    const int d = content.degree() + t_power;
    return BiForm(d, 0, 0, {homogenize(content, d)});
  }

  if (a[static_cast<std::size_t>(n)].is_zero()) {
    // v divides F.
    BiForm v(-F.twist(), 1, F.twist());
    v.set_row(1, make_form({1}));
    return v;
  }
  if (n <= 1) return std::nullopt;

  int D = 0;
  for (const auto& c : a) D = std::max(D, c.degree());
  const UPoly& lead = a[static_cast<std::size_t>(n)];

  std::optional<long> s0;
  for (long k = 0; k < 400 && !s0; ++k) {
    const long s = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    if (is_zero(lead(Rational(s)))) continue;
    std::vector<Rational> fc;
    for (const auto& c : a) fc.push_back(c(Rational(s)));
    const UPoly f0(std::move(fc));
    if (gcd(f0, f0.derivative()).degree() == 0) s0 = s;
  }
  if (!s0) throw input_error("no square-free fiber: form has a repeated factor");

  SUPoly shifted;
  for (const auto& c : a) shifted.push_back(c.taylor_shift(Rational(*s0)));
  const int precision = D + 1;
  const UPoly lead_inv = detail::series_inverse(shifted[static_cast<std::size_t>(n)], precision);
  // Monic f as σ-coefficients, each a polynomial in u.
  std::vector<UPoly> fm(static_cast<std::size_t>(precision));
  for (int i = 0; i <= n; ++i) {
    const UPoly c = detail::truncate(shifted[static_cast<std::size_t>(i)] * lead_inv, precision);
    for (int k = 0; k <= c.degree(); ++k) fm[static_cast<std::size_t>(k)] += UPoly::monomial(c.coeff(k), i);
  }

  std::vector<UPoly> fiber_factors;
  for (const auto& ff : factor_rational(fm[0])) fiber_factors.push_back(ff.factor.monic());
  const std::size_t r = fiber_factors.size();

  for (int k = 1; k <= bound && k < n; ++k) {
    for (unsigned mask = 1; mask < (1U << r); ++mask) {
      UPoly g0 = UPoly::constant(1);
      for (std::size_t i = 0; i < r; ++i)
        if (mask & (1U << i)) g0 *= fiber_factors[i];
      if (g0.degree() != k) continue;
      const UPoly h0 = fm[0] / g0;
      const auto g = detail::hensel_lift_series(fm, g0, h0, precision);
      // Coefficients of lead * g, polynomials in σ of degree <= D.
      SUPoly cand(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i <= k; ++i) {
        std::vector<Rational> series;
        for (int p = 0; p < precision; ++p)
          series.push_back(p < static_cast<int>(g.size()) ? g[static_cast<std::size_t>(p)].coeff(i) : Rational(0));
        const UPoly ci = detail::truncate(shifted[static_cast<std::size_t>(n)] * UPoly(std::move(series)), precision);
        cand[static_cast<std::size_t>(i)] = ci.taylor_shift(Rational(-*s0));
      }
      UPoly cont;
      for (const auto& c : cand)
        if (!c.is_zero()) cont = cont.is_zero() ? c.monic() : gcd(cont, c);
      for (auto& c : cand) c = c / cont;
      const auto quotient = detail::divide_exact(a, cand);
      if (!quotient) continue;
      const BiForm G = detail::homogenize_factor(cand, F.twist());
      const BiForm H = detail::homogenize_factor(*quotient, F.twist());
      if (!(G * H == F)) throw consistency_error("bivariate factor does not multiply back");
      return G;
    }
  }
  return std::nullopt;
}

}  // namespace dp4
