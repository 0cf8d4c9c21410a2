#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dp4/biform.hpp"
#include "dp4/chow.hpp"
#include "dp4/factor_search.hpp"
#include "dp4/pencil.hpp"
#include "dp4/quintic.hpp"

namespace dp4 {

using FormMatrix = std::vector<std::vector<BinaryForm>>;

/// A del Pezzo fibration presented by two symmetric 5x5 matrices of forms
/// in (s,t); entry (i,j) of A_k has degree d_i + d_j - e_k, and is zero
/// when that number is negative.
struct FamilySpec {
  std::array<int, 5> d{};
  std::array<int, 2> e{};
  std::array<FormMatrix, 2> A;
};

inline int entry_degree(const FamilySpec& spec, std::size_t k, std::size_t i, std::size_t j) {
  return spec.d[i] + spec.d[j] - spec.e[k];
}

inline int degree_sum(const std::array<int, 5>& d) { return std::accumulate(d.begin(), d.end(), 0); }

/// Checks the splitting relation, the matrix shapes and entry degrees;
/// normalizes zero entries to the zero form of the nominal degree.
inline void validate(FamilySpec& spec) {
  if (degree_sum(spec.d) != spec.e[0] + spec.e[1])
    throw input_error("inconsistent splittings: sum of d must equal e1 + e2");
  const int h = -2 * degree_sum(spec.d);
  if (h < 0) throw input_error("negative height");
  if (4 * std::min(spec.e[0], spec.e[1]) > -h) throw input_error("min(e) must be at most -h/4");
  for (std::size_t k = 0; k < 2; ++k) {
    auto& a = spec.A[k];
    if (a.size() != 5) throw input_error("family matrices must be 5x5");
    for (const auto& row : a)
      if (row.size() != 5) throw input_error("family matrices must be 5x5");
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        BinaryForm& x = a[i][j];
        const int deg = entry_degree(spec, k, i, j);
        if (x.is_zero()) {
          x = BinaryForm(std::max(deg, 0));
        } else if (deg < 0 || x.degree() != deg) {
          throw input_error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of A" +
                            std::to_string(k + 1) + " must have degree " + std::to_string(deg));
        }
        if (j < i && !(a[i][j] == a[j][i])) throw input_error("family matrices must be symmetric");
      }
  }
}

inline int height(const FamilySpec& spec) {
  if (degree_sum(spec.d) != spec.e[0] + spec.e[1])
    throw input_error("inconsistent splittings: sum of d must equal e1 + e2");
  return -2 * degree_sum(spec.d);
}

/// Value of a matrix of forms at (s, t).
inline RationalMatrix evaluate(const FormMatrix& m, const Rational& s, const Rational& t) {
  RationalMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m[i][j].is_zero()) out(i, j) = dp4::evaluate(m[i][j], s, t);
  return out;
}

/// det(u A1(s,t) + v A2(s,t)) at a fixed (s,t).
inline BinaryForm fiber_quintic(const FamilySpec& spec, const Rational& s, const Rational& t) {
  const RationalMatrix p = evaluate(spec.A[0], s, t), q = evaluate(spec.A[1], s, t);
  std::vector<std::vector<BinaryForm>> m(5, std::vector<BinaryForm>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m[i][j] = linear_form(p(i, j), q(i, j));
  return form_determinant(m, 1);
}

namespace detail {
/// Sample abscissae 0, 1, -1, 2, -2, ...
inline Rational sample_point(std::size_t k) {
  const long h = static_cast<long>((k + 1) / 2);
  return Rational(k % 2 ? h : -h);
}

/// Form of the given degree in (s,t) through the values at (x_k, 1); the
/// extra samples beyond degree + 1 act as a consistency check.
inline BinaryForm interpolate_form(const std::vector<Rational>& xs, const std::vector<Rational>& ys, int degree) {
  const UPoly p = interpolate(xs, ys);
  if (p.degree() > degree) throw consistency_error("interpolated form exceeds its nominal degree");
  return homogenize(p, degree);
}
}  // namespace detail

/// The spectral form: row j (coefficient of u^(5-j) v^j) has degree
/// 2 sum(d) - 5 e1 + j (e1 - e2). Built by evaluation at the points
/// (x_k, 1) and interpolation.
inline BiForm spectral_form(const FamilySpec& spec) {
  const int m = 2 * degree_sum(spec.d) - 5 * spec.e[0];
  const int twist = spec.e[0] - spec.e[1];
  BiForm F(m, 5, twist);
  int top = 0;
  for (int j = 0; j <= 5; ++j) top = std::max(top, F.row_degree(j));
  const std::size_t samples = static_cast<std::size_t>(top) + 2;
  std::vector<Rational> xs;
  std::vector<BinaryForm> fibers;
  for (std::size_t k = 0; k < samples; ++k) {
    xs.push_back(detail::sample_point(k));
    fibers.push_back(fiber_quintic(spec, xs.back(), 1));
  }
  for (int j = 0; j <= 5; ++j) {
    std::vector<Rational> ys;
    for (const auto& f : fibers) ys.push_back(f[j]);
    if (F.row_degree(j) < 0) {
      if (std::any_of(ys.begin(), ys.end(), [](const Rational& y) { return !is_zero(y); }))
        throw consistency_error("spectral row of negative degree is nonzero");
      continue;
    }
    F.set_row(j, detail::interpolate_form(xs, ys, F.row_degree(j)));
  }
  if (F.is_zero()) throw input_error("generically degenerate family");
  return F;
}

/// Class alpha f + beta xi on the Hirzebruch surface F_n.
struct HirzebruchClass {
  int n = 0;
  int alpha = 0;
  int beta = 0;
};

inline int arithmetic_genus(const HirzebruchClass& c) {
  if (c.beta < 1) throw input_error("arithmetic genus needs beta >= 1");
  return (c.alpha - 1) * (c.beta - 1) - c.n * c.beta * (c.beta - 1) / 2;
}

struct SpectralClassReport {
  int a = 0;
  HirzebruchClass cls;
  bool reduced_range = false;      // -h/3 <= a <= -h/4
  bool irreducible_range = false;  // -3h/10 <= a <= -h/4
  std::string flag;                // empty when the reduced range holds
};

inline SpectralClassReport spectral_class_for(int h, int a) {
  SpectralClassReport r;
  r.a = a;
  r.cls = {-2 * a - h / 2, -5 * a - h, 5};
  r.reduced_range = 3 * a >= -h && 4 * a <= -h;
  r.irreducible_range = 10 * a >= -3 * h && 4 * a <= -h;
  if (!r.reduced_range) r.flag = "spectral curve non-reduced or family non-generically-smooth";
  return r;
}

inline SpectralClassReport spectral_class(const FamilySpec& spec) {
  return spectral_class_for(height(spec), std::min(spec.e[0], spec.e[1]));
}

struct HeightScan {
  int h = 0;
  std::vector<std::pair<int, int>> reduced;      // (a, n)
  std::vector<std::pair<int, int>> irreducible;  // (a, n)
};

inline HeightScan height_bounds_scan(int h) {
  if (h < 0 || h % 2) throw input_error("height must be even and non-negative");
  HeightScan s;
  s.h = h;
  for (int a = -h; a <= 0; ++a) {
    const int n = -2 * a - h / 2;
    if (n < 0) continue;
    const auto r = spectral_class_for(h, a);
    if (r.reduced_range) s.reduced.emplace_back(a, n);
    if (r.irreducible_range) s.irreducible.emplace_back(a, n);
  }
  return s;
}

struct FamilyDiscriminant {
  BinaryForm delta;
  int degree = 0;
  bool g1 = false;  // square-free
  int singular_fibers = 0;
};

/// Discriminant in (u,v) of a binary quintic biform, as a form in (s,t) of
/// degree 8 m + 20 twist.
inline BinaryForm biform_discriminant(const BiForm& F) {
  if (F.n() != 5) throw input_error("biform discriminant needs (u,v)-degree 5");
  const int degree = 8 * F.m() + 20 * F.twist();
  if (degree < 0) throw input_error("negative discriminant degree");
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k < static_cast<std::size_t>(degree) + 2; ++k) {
    xs.push_back(detail::sample_point(k));
    ys.push_back(discriminant(F.fiber(xs.back(), 1)));
  }
  return detail::interpolate_form(xs, ys, degree);
}

inline FamilyDiscriminant discriminant_of(const BiForm& F) {
  FamilyDiscriminant out;
  out.delta = biform_discriminant(F);
  if (out.delta.is_zero()) throw input_error("non-generically-smooth family: discriminant vanishes identically");
  out.degree = out.delta.degree();
  out.g1 = true;
  for (const auto& [g, m] : squarefree_profile(out.delta)) {
    if (g.degree() < 1) continue;
    out.singular_fibers += g.degree();
    if (m > 1) out.g1 = false;
  }
  return out;
}

inline FamilyDiscriminant discriminant_family(const FamilySpec& spec) { return discriminant_of(spectral_form(spec)); }

enum class G2Status { certified, fails, inconclusive, impossible };

inline std::string to_string(G2Status s) {
  switch (s) {
    case G2Status::certified: return "certified";
    case G2Status::fails: return "fails";
    case G2Status::inconclusive: return "inconclusive";
    case G2Status::impossible: return "impossible";
  }
  return "inconclusive";
}

struct GenericityFlags {
  bool g1 = false;
  bool rational_factor_found = false;
  std::optional<BiForm> factor;
  std::optional<Rational> witness_fiber;  // s0 whose fiber has an irreducible factor of degree >= 2
  std::vector<int> witness_degrees;
  bool irreducible = false;
  G2Status g2 = G2Status::inconclusive;
};

/// A rational s0 with square-free quintic fiber F(s0,1) of exact degree 5
/// having an irreducible factor of degree at least 2.
inline std::optional<std::pair<Rational, std::vector<int>>> irreducibility_witness(const BiForm& F, int tries = 41) {
  for (std::size_t k = 0; k < static_cast<std::size_t>(tries); ++k) {
    const Rational s0 = detail::sample_point(k);
    const BinaryForm f = F.fiber(s0, 1);
    if (is_zero(f[0]) || is_zero(discriminant(f))) continue;
    std::vector<int> degrees;
    for (const auto& fac : factor_rational(dehomogenize(f))) degrees.push_back(fac.factor.degree());
    std::sort(degrees.begin(), degrees.end());
    if (degrees.back() >= 2) return std::make_pair(s0, degrees);
  }
  return std::nullopt;
}

inline GenericityFlags genericity_of(const BiForm& F, int h) {
  GenericityFlags g;
  try {
    g.g1 = discriminant_of(F).g1;
  } catch (const input_error&) {
    g.g1 = false;
  }
  if (g.g1) {
    for (int bound : {1, 2}) {
      g.factor = factor_search_bounded(F, bound);
      if (g.factor) break;
    }
  } else {
    // a repeated factor makes the square-free fiber search impossible
    try {
      for (int bound : {1, 2}) {
        g.factor = factor_search_bounded(F, bound);
        if (g.factor) break;
      }
    } catch (const input_error&) {
      g.factor.reset();
    }
  }
  g.rational_factor_found = g.factor.has_value();
  if (!g.rational_factor_found) {
    if (const auto w = irreducibility_witness(F)) {
      g.witness_fiber = w->first;
      g.witness_degrees = w->second;
    }
  }
  g.irreducible = !g.rational_factor_found && g.witness_fiber.has_value();
  if (h == 4) g.g2 = G2Status::impossible;
  else if (g.rational_factor_found) g.g2 = G2Status::fails;
  else if (g.g1 && g.irreducible) g.g2 = G2Status::certified;
  else g.g2 = G2Status::inconclusive;
  return g;
}

inline GenericityFlags genericity_check(const FamilySpec& spec) { return genericity_of(spectral_form(spec), height(spec)); }

struct DimensionReport {
  int h = 0;
  int moduli_dimension = 0;          // (3/2) h + 2
  int linear_system_dimension = 0;   // (3/2) h + 5
  int riemann_roch_dimension = 0;    // 5h/2 - (h - 4) + 1
  int expected_dimension = 0;        // (3/2) h - 1
  int map_degree = 0;                // 6 h
  std::array<std::pair<int, int>, 4> invariant_degrees{};  // (d, d h / 4)
};

inline DimensionReport dimension_report(int h) {
  if (h < 0 || h % 2) throw input_error("height must be even and non-negative");
  DimensionReport r;
  r.h = h;
  r.moduli_dimension = 3 * h / 2 + 2;
  r.linear_system_dimension = 3 * h / 2 + 5;
  r.riemann_roch_dimension = 5 * h / 2 - (h - 4) + 1;
  r.expected_dimension = 3 * h / 2 - 1;
  r.map_degree = 6 * h;
  const int ds[] = {4, 8, 12, 18};
  for (std::size_t k = 0; k < 4; ++k) r.invariant_degrees[k] = {ds[k], ds[k] * h / 4};
  return r;
}

/// J_d(F(s,t)) as a form of degree d h / 4, with the degree of its
/// dehomogenization (smaller when the fiber over (1:0) is special).
struct InvariantPullback {
  int d = 0;
  int predicted = 0;
  BinaryForm form;
  int affine_degree = -1;
};

inline std::array<InvariantPullback, 4> invariant_pullbacks(const BiForm& F) {
  const int weight_degree = 2 * F.m() + 5 * F.twist();  // deg of J4 is 2 * weight_degree
  std::array<InvariantPullback, 4> out;
  const int ds[] = {4, 8, 12, 18};
  int top = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k].d = ds[k];
    out[k].predicted = ds[k] * weight_degree / 2;
    top = std::max(top, out[k].predicted);
  }
  std::vector<Rational> xs;
  std::vector<InvariantVector> vals;
  for (std::size_t k = 0; k < static_cast<std::size_t>(top) + 2; ++k) {
    xs.push_back(detail::sample_point(k));
    vals.push_back(invariants(F.fiber(xs.back(), 1)));
  }
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<Rational> ys;
    for (const auto& v : vals) ys.push_back(k == 0 ? v.J4 : k == 1 ? v.J8 : k == 2 ? v.J12 : v.J18);
    out[k].form = detail::interpolate_form(xs, ys, out[k].predicted);
    out[k].affine_degree = dehomogenize(out[k].form).degree();
  }
  return out;
}

/// Pullback along (s,t) -> (p(s,t), q(s,t)) with p, q of a common degree k.
inline FamilySpec pullback(const FamilySpec& spec, const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() != q.degree() || p.degree() < 1) throw input_error("pullback needs two forms of one positive degree");
  const int k = p.degree();
  FamilySpec out;
  for (std::size_t i = 0; i < 5; ++i) out.d[i] = k * spec.d[i];
  for (std::size_t i = 0; i < 2; ++i) out.e[i] = k * spec.e[i];
  for (std::size_t a = 0; a < 2; ++a) {
    out.A[a].assign(5, std::vector<BinaryForm>(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const BinaryForm& x = spec.A[a][i][j];
        BinaryForm acc(k * x.degree());
        if (!x.is_zero()) {
          // sum_c x_c p^(D-c) q^c
          for (int c = 0; c <= x.degree(); ++c) {
            BinaryForm term = make_form({1});
            for (int r = 0; r < x.degree() - c; ++r) term = term * p;
            for (int r = 0; r < c; ++r) term = term * q;
            acc += term * x[c];
          }
        }
        out.A[a][i][j] = acc;
      }
  }
  validate(out);
  return out;
}

/// Two forms of bidegree (m_k, 2) on P^1 x P^4, as symmetric matrices of
/// forms of degree m_k.
struct CompleteIntersectionP4 {
  std::array<int, 2> m{};
  std::array<FormMatrix, 2> Q;
};

/// A (1,1) form sum l_i(s,t) x_i and two constant quadrics on P^1 x P^5.
struct CompleteIntersectionP5 {
  std::array<BinaryForm, 6> ell;
  std::array<RationalMatrix, 2> Q;
};

inline FamilySpec family_from_ci(const CompleteIntersectionP4& ci) {
  if (ci.m[0] < 0 || ci.m[1] < 0) throw input_error("negative bidegree");
  const int total = ci.m[0] + ci.m[1];
  FamilySpec spec;
  spec.d.fill(-total);
  spec.e = {-2 * total - ci.m[0], -2 * total - ci.m[1]};
  spec.A = ci.Q;
  validate(spec);
  return spec;
}

/// The (1,1) form cuts out P(K) with K = ker(O^6 -> O(1)) = O^4 + O(-1); a
/// polynomial basis of K (four constant vectors, one linear) restricts the
/// quadrics, giving d = (-1,-1,-1,-1,0) and e = (-2,-2).
inline FamilySpec family_from_ci(const CompleteIntersectionP5& ci) {
  RationalMatrix lin(2, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    if (ci.ell[i].degree() != 1 && !ci.ell[i].is_zero()) throw input_error("the (1,1) form needs linear coefficients");
    if (ci.ell[i].is_zero()) continue;
    lin(0, i) = ci.ell[i][0];
    lin(1, i) = ci.ell[i][1];
  }
  const std::size_t r = rank(lin);
  if (r == 0) throw input_error("elimination impossible: the (1,1) form vanishes");
  if (r == 1) throw input_error("elimination impossible: the (1,1) form is a product of linear forms");
  for (const auto& q : ci.Q)
    if (q.rows() != 6 || q.cols() != 6 || !(q == q.transpose())) throw input_error("quadrics must be symmetric 6x6");
  const auto constant = kernel_basis(lin);  // 4 vectors
  // degree-one sections s u + t w: a.u = 0, b.w = 0, a.w + b.u = 0
  RationalMatrix sys(3, 12);
  for (std::size_t i = 0; i < 6; ++i) {
    sys(0, i) = lin(0, i);
    sys(1, 6 + i) = lin(1, i);
    sys(2, 6 + i) = lin(0, i);
    sys(2, i) = lin(1, i);
  }
  std::optional<std::pair<RationalVector, RationalVector>> linear;
  RationalMatrix known(8, 12);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t i = 0; i < 6; ++i) {
      known(c, i) = constant[c][i];
      known(4 + c, 6 + i) = constant[c][i];
    }
  for (const auto& v : kernel_basis(sys)) {
    RationalMatrix test(9, 12);
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 12; ++b) test(a, b) = known(a, b);
    for (std::size_t b = 0; b < 12; ++b) test(8, b) = v[b];
    if (rank(test) == 9) {
      linear = std::make_pair(RationalVector(v.begin(), v.begin() + 6), RationalVector(v.begin() + 6, v.end()));
      break;
    }
  }
  if (!linear) throw consistency_error("no degree-one section of the kernel bundle");
  std::vector<std::vector<BinaryForm>> basis;  // 5 vectors of 6 forms
  for (const auto& c : constant) {
    std::vector<BinaryForm> v;
    for (std::size_t i = 0; i < 6; ++i) v.push_back(BinaryForm(0, {c[i]}));
    basis.push_back(v);
  }
  {
    std::vector<BinaryForm> v;
    for (std::size_t i = 0; i < 6; ++i) v.push_back(linear_form(linear->first[i], linear->second[i]));
    basis.push_back(v);
  }
  FamilySpec spec;
  spec.d = {-1, -1, -1, -1, 0};
  spec.e = {-2, -2};
  for (std::size_t k = 0; k < 2; ++k) {
    spec.A[k].assign(5, std::vector<BinaryForm>(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        BinaryForm acc(basis[i][0].degree() + basis[j][0].degree());
        for (std::size_t a = 0; a < 6; ++a)
          for (std::size_t b = 0; b < 6; ++b)
            if (!is_zero(ci.Q[k](a, b))) acc += basis[i][a] * basis[j][b] * ci.Q[k](a, b);
        spec.A[k][i][j] = acc;
      }
  }
  validate(spec);
  return spec;
}

/// Symmetric matrix of random forms with entry (i,j) of degree deg(i,j).
template <typename DegreeFn>
FormMatrix random_form_matrix(std::mt19937_64& rng, DegreeFn deg, long bound = 5) {
  FormMatrix m(5, std::vector<BinaryForm>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) {
      const int d = deg(i, j);
      m[i][j] = m[j][i] = d < 0 ? BinaryForm(0) : random_form(rng, d, bound);
    }
  return m;
}

inline FamilySpec random_family(std::mt19937_64& rng, const std::array<int, 5>& d, const std::array<int, 2>& e) {
  FamilySpec spec;
  spec.d = d;
  spec.e = e;
  for (std::size_t k = 0; k < 2; ++k)
    spec.A[k] = random_form_matrix(rng, [&](std::size_t i, std::size_t j) { return d[i] + d[j] - e[k]; });
  validate(spec);
  return spec;
}

inline CompleteIntersectionP4 random_ci_p4(std::mt19937_64& rng, int m1, int m2) {
  CompleteIntersectionP4 ci;
  ci.m = {m1, m2};
  for (std::size_t k = 0; k < 2; ++k) ci.Q[k] = random_form_matrix(rng, [&](std::size_t, std::size_t) { return ci.m[k]; });
  return ci;
}

inline CompleteIntersectionP5 random_ci_p5(std::mt19937_64& rng) {
  CompleteIntersectionP5 ci;
  for (auto& l : ci.ell) l = random_form(rng, 1, 5);
  for (auto& q : ci.Q) {
    q = RationalMatrix(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i; j < 6; ++j) q(i, j) = q(j, i) = random_small_rational(rng, 5);
  }
  return ci;
}

/// Triple intersection check on the P^4-bundle: [X] = (2H - e1 f)(2H - e2 f)
/// and the integral of [X] H^3 against 2 sum(d).
struct ChernCheck {
  MPoly lhs;  // integral of [X] H^3
  MPoly rhs;  // 2 * sum d
  bool holds = false;
};

namespace detail {
inline ChernCheck chern_check(const std::array<MPoly, 5>& d, const std::array<MPoly, 2>& e, std::size_t e2_index,
                              bool substitute) {
  const ChowClass f = ChowClass::monomial(1, 0, 1), H = ChowClass::monomial(0, 1, 1);
  MPoly c1;
  for (const auto& x : d) c1 += x;
  const ChowClass two_h = ChowClass::monomial(0, 1, 2);
  const ChowClass x = (two_h + f * ChowClass::monomial(0, 0, -e[0])) * (two_h + f * ChowClass::monomial(0, 0, -e[1]));
  ChernCheck out;
  out.lhs = (x * H * H * H).integrate(c1);
  out.rhs = c1 * Rational(2);
  MPoly diff = out.lhs - out.rhs;
  // impose sum d = e1 + e2 by eliminating e2
  if (substitute) diff = diff.substitute(e2_index, c1 - e[0]);
  out.holds = diff.is_zero();
  return out;
}
}  // namespace detail

/// Symbolic identity in d1..d5, e1, e2 (e2 eliminated by the relation).
inline ChernCheck chern_verify_symbolic() {
  std::array<MPoly, 5> d;
  for (std::size_t i = 0; i < 5; ++i) d[i] = MPoly::variable(i, 7);
  const std::array<MPoly, 2> e{MPoly::variable(5, 7), MPoly::variable(6, 7)};
  return detail::chern_check(d, e, 6, true);
}

inline ChernCheck chern_verify(const std::array<int, 5>& d, const std::array<int, 2>& e) {
  if (degree_sum(d) != e[0] + e[1]) throw input_error("inconsistent splittings: sum of d must equal e1 + e2");
  std::array<MPoly, 5> dd;
  for (std::size_t i = 0; i < 5; ++i) dd[i] = MPoly(static_cast<long>(d[i]));
  return detail::chern_check(dd, {MPoly(static_cast<long>(e[0])), MPoly(static_cast<long>(e[1]))}, 0, false);
}

}  // namespace dp4
