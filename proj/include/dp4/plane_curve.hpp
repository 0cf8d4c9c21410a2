#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dp4/matrix.hpp"
#include "dp4/mpoly.hpp"
#include "dp4/upoly.hpp"

namespace dp4 {

using PlanePoint = std::array<Rational, 3>;

/// A point of a divisor on a plane curve with multiplicity 1 or 2.
struct DivisorPoint {
  PlanePoint point;
  int multiplicity = 1;
};

namespace detail {

using UTriple = std::array<UPoly, 3>;

inline std::vector<std::array<int, 3>> ternary_monomials(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  return out;
}

inline int ternary_dimension(int degree) { return degree < 0 ? 0 : (degree + 1) * (degree + 2) / 2; }

inline PlanePoint cross(const PlanePoint& a, const PlanePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline UTriple cross(const UTriple& a, const UTriple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Rational dot(const PlanePoint& a, const PlanePoint& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline bool is_null(const PlanePoint& p) { return is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]); }

inline Rational eval(const MPoly& f, const PlanePoint& p) { return f.evaluate(std::vector<Rational>(p.begin(), p.end())); }

/// f(X(lambda)) for a triple of polynomials in lambda.
inline UPoly eval(const MPoly& f, const UTriple& x) {
  UPoly acc;
  for (const auto& [e, c] : f.terms()) {
    UPoly term = UPoly::constant(c);
    for (std::size_t k = 0; k < e.size(); ++k) term = term * pow(x[k], e[k]);
    acc = acc + term;
  }
  return acc;
}

inline MPoly monomial3(const std::array<int, 3>& e) { return MPoly::monomial({e[0], e[1], e[2]}, 1); }

inline std::array<MPoly, 3> gradient(const MPoly& f) { return {f.derivative(0), f.derivative(1), f.derivative(2)}; }

inline PlanePoint eval(const std::array<MPoly, 3>& g, const PlanePoint& p) { return {eval(g[0], p), eval(g[1], p), eval(g[2], p)}; }
inline UTriple eval(const std::array<MPoly, 3>& g, const UTriple& x) { return {eval(g[0], x), eval(g[1], x), eval(g[2], x)}; }

/// Resultant in y of two polynomials with formal y-degrees, by the
/// Sylvester determinant (vanishes when both leading coefficients do).
inline Rational formal_resultant(const UPoly& p, int dp, const UPoly& q, int dq) {
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  if (n == 0) return 1;
  RationalMatrix s(n, n);
  for (int r = 0; r < dq; ++r)
    for (int i = 0; i <= dp; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = p.coeff(dp - i);
  for (int r = 0; r < dp; ++r)
    for (int i = 0; i <= dq; ++i) s(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r + i)) = q.coeff(dq - i);
  return determinant(s);
}

inline bool is_homogeneous(const MPoly& f, int degree) {
  for (const auto& [e, c] : f.terms()) {
    int s = 0;
    for (int v : e) s += v;
    if (s != degree || e.size() > 3) return false;
  }
  return true;
}

}  // namespace detail

/// A plane curve F(x,y,z) = 0 of the given degree.
struct PlaneCurve {
  MPoly F;
  int degree = 0;
  PlaneCurve() = default;
  PlaneCurve(MPoly f, int d) : F(std::move(f)), degree(d) {
    if (F.is_zero() || !detail::is_homogeneous(F, degree)) throw input_error("plane curve must be a nonzero ternary form of its degree");
  }
  bool contains(const PlanePoint& p) const { return is_zero(detail::eval(F, p)); }
};

/// Exact smoothness certificate: no common zero of the partials on the line
/// z = 0, and the gcd of the pairwise resultants (in y) of the partials on
/// z = 1 is constant. A false answer means "not certified".
inline bool certify_smooth(const PlaneCurve& c) {
  const auto g = detail::gradient(c.F);
  const int d = c.degree - 1;
  // points (x : 1 : 0) and (1 : 0 : 0)
  {
    UPoly acc;
    for (const auto& gi : g) acc = gcd(acc, detail::eval(gi, detail::UTriple{UPoly::x(), UPoly({1}), UPoly()}));
    if (acc.is_zero() || acc.degree() > 0) return false;
    if (detail::is_null(detail::eval(g, PlanePoint{1, 0, 0}))) return false;
  }
  const std::size_t samples = static_cast<std::size_t>(d * d) + 2;
  std::vector<Rational> xs;
  std::array<std::vector<Rational>, 3> res;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < samples; ++k) {
    const Rational x0(static_cast<long>(k) - static_cast<long>(samples / 2));
    xs.push_back(x0);
    const detail::UTriple pt{UPoly::constant(x0), UPoly::x(), UPoly({1})};
    std::array<UPoly, 3> gy;
    for (std::size_t i = 0; i < 3; ++i) gy[i] = detail::eval(g[i], pt);
    for (std::size_t r = 0; r < 3; ++r)
      res[r].push_back(detail::formal_resultant(gy[static_cast<std::size_t>(pairs[r].first)], d,
                                                gy[static_cast<std::size_t>(pairs[r].second)], d));
  }
  UPoly acc;
  for (const auto& ys : res) acc = gcd(acc, interpolate(xs, ys));
  return !acc.is_zero() && acc.degree() == 0;
}

namespace detail {

struct AuxLine {
  PlanePoint base, direction;
  UPoly residual;  // F(base + l direction) / l, square-free of degree deg F - 1
  PlanePoint normal;
  PlanePoint transversal;  // c with c . X(l) coprime to the residual
  int multiplicity = 1;
};

inline std::vector<PlanePoint> small_vectors() {
  std::vector<PlanePoint> out;
  for (int r = 1; r <= 3; ++r)
    for (int a = -r; a <= r; ++a)
      for (int b = -r; b <= r; ++b)
        for (int c = -r; c <= r; ++c) {
          if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != r) continue;
          out.push_back({Rational(a), Rational(b), Rational(c)});
        }
  return out;
}

inline UTriple line_param(const PlanePoint& p, const PlanePoint& w) {
  return {UPoly(std::vector<Rational>{p[0], w[0]}), UPoly(std::vector<Rational>{p[1], w[1]}), UPoly(std::vector<Rational>{p[2], w[2]})};
}

inline std::optional<AuxLine> choose_line(const PlaneCurve& c, const DivisorPoint& p, const std::vector<PlanePoint>& avoid,
                                          const std::vector<AuxLine>& chosen) {
  for (const auto& w : small_vectors()) {
    if (is_null(cross(p.point, w)) || is_zero(eval(c.F, w))) continue;
    const UTriple x = line_param(p.point, w);
    const UPoly f = eval(c.F, x);
    if (f.degree() != c.degree || !is_zero(f.coeff(0))) continue;
    const UPoly q = f / UPoly({0, 1});
    if (is_zero(q.coeff(0)) || gcd(q, q.derivative()).degree() > 0) continue;
    const PlanePoint n = cross(p.point, w);
    bool ok = true;
    for (const auto& r : avoid)
      if (is_zero(dot(n, r))) ok = false;
    for (const auto& l : chosen) {
      const PlanePoint meet = cross(n, l.normal);
      if (is_null(meet) || c.contains(meet)) ok = false;
    }
    if (!ok) continue;
    for (const auto& t : small_vectors()) {
      const UPoly tx = x[0] * t[0] + x[1] * t[1] + x[2] * t[2];
      if (tx.is_zero() || gcd(tx, q).degree() > 0) continue;
      return AuxLine{p.point, w, q, n, t, p.multiplicity};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// h^0 of O(M) + P - N on a smooth plane curve, for effective divisors P and
/// N with disjoint supports at rational points of multiplicity 1 or 2.
/// A rational line through each point of P cuts out P + R; sections are
/// forms G of degree M + deg P with G|_C >= R + N, modulo multiples of F.
inline int h0_plane(const PlaneCurve& c, int M, const std::vector<DivisorPoint>& P, const std::vector<DivisorPoint>& N) {
  if (M < 0) throw input_error("negative twist");
  const auto grad = detail::gradient(c.F);
  std::vector<PlanePoint> all;
  for (const auto* list : {&P, &N})
    for (const auto& p : *list) {
      if (p.multiplicity < 1 || p.multiplicity > 2) throw input_error("unsupported divisor presentation: multiplicity must be 1 or 2");
      if (detail::is_null(p.point) || !c.contains(p.point)) throw input_error("divisor point is not on the curve");
      if (detail::is_null(detail::eval(grad, p.point))) throw input_error("divisor point is singular");
      for (const auto& q : all)
        if (detail::is_null(detail::cross(q, p.point))) throw input_error("unsupported divisor presentation: repeated point");
      all.push_back(p.point);
    }
  std::vector<detail::AuxLine> lines;
  int degree = M;
  for (const auto& p : P) {
    std::vector<PlanePoint> avoid;
    for (const auto& r : all)
      if (!detail::is_null(detail::cross(r, p.point))) avoid.push_back(r);
    const auto line = detail::choose_line(c, p, avoid, lines);
    if (!line) throw consistency_error("no auxiliary line through a divisor point");
    lines.push_back(*line);
    degree += p.multiplicity;
  }
  const auto monomials = detail::ternary_monomials(degree);
  std::vector<RationalVector> rows;
  auto add_rows = [&rows, &monomials](const std::vector<std::vector<Rational>>& cols) {
    // cols[m] holds the conditions contributed by monomial m
    for (std::size_t r = 0; r < cols.front().size(); ++r) {
      RationalVector row;
      for (std::size_t m = 0; m < monomials.size(); ++m) row.push_back(cols[m][r]);
      rows.push_back(std::move(row));
    }
  };
  for (const auto& l : lines) {
    const detail::UTriple x = detail::line_param(l.base, l.direction);
    const detail::UTriple v = detail::cross(detail::eval(grad, x), detail::UTriple{UPoly::constant(l.transversal[0]), UPoly::constant(l.transversal[1]), UPoly::constant(l.transversal[2])});
    const int rdeg = l.residual.degree();
    std::vector<std::vector<Rational>> cols;
    for (const auto& e : monomials) {
      const MPoly g = detail::monomial3(e);
      std::vector<Rational> col;
      const UPoly value = detail::eval(g, x) % l.residual;
      for (int i = 0; i < rdeg; ++i) col.push_back(value.coeff(i));
      if (l.multiplicity == 2) {
        const auto dg = detail::eval(detail::gradient(g), x);
        const UPoly slope = (dg[0] * v[0] + dg[1] * v[1] + dg[2] * v[2]) % l.residual;
        for (int i = 0; i < rdeg; ++i) col.push_back(slope.coeff(i));
      }
      cols.push_back(std::move(col));
    }
    add_rows(cols);
  }
  for (const auto& n : N) {
    PlanePoint t{};
    for (const auto& cand : detail::small_vectors())
      if (!is_zero(detail::dot(cand, n.point))) {
        t = cand;
        break;
      }
    const PlanePoint v = detail::cross(detail::eval(grad, n.point), t);
    std::vector<std::vector<Rational>> cols;
    for (const auto& e : monomials) {
      const MPoly g = detail::monomial3(e);
      std::vector<Rational> col{detail::eval(g, n.point)};
      if (n.multiplicity == 2) col.push_back(detail::dot(detail::eval(detail::gradient(g), n.point), v));
      cols.push_back(std::move(col));
    }
    add_rows(cols);
  }
  std::size_t kernel = monomials.size();
  if (!rows.empty()) kernel -= rank(from_rows(rows, monomials.size()));
  return static_cast<int>(kernel) - detail::ternary_dimension(degree - c.degree);
}

/// Value of the quadratic form attached to the theta characteristic
/// theta = O(1) on a smooth plane quintic.
struct ThetaValue {
  int q = 0;
  int h0_theta = 0;
  int h0_theta_eta = 0;
};

inline ThetaValue theta_quadratic_form(const PlaneCurve& c, const std::vector<PlanePoint>& d1, const std::vector<PlanePoint>& d2) {
  if (c.degree != 5) throw input_error("the theta form needs a plane quintic");
  if (d1.size() != d2.size()) throw input_error("unsupported divisor presentation: degrees differ");
  if (!certify_smooth(c)) throw input_error("plane quintic is not certified smooth");
  auto with = [](const std::vector<PlanePoint>& pts, int m) {
    std::vector<DivisorPoint> out;
    for (const auto& p : pts) out.push_back({p, m});
    return out;
  };
  if (!d1.empty() && h0_plane(c, 0, with(d1, 2), with(d2, 2)) != 1) throw input_error("not 2-torsion");
  ThetaValue v;
  v.h0_theta = h0_plane(c, 1, {}, {});
  v.h0_theta_eta = h0_plane(c, 1, with(d1, 1), with(d2, 1));
  v.q = (v.h0_theta + v.h0_theta_eta) % 2;
  return v;
}

}  // namespace dp4
