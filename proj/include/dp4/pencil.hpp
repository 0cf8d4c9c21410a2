#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dp4/binary_form.hpp"
#include "dp4/factor.hpp"
#include "dp4/matrix.hpp"
#include "dp4/mpoly.hpp"
#include "dp4/quintic.hpp"

namespace dp4 {

/// Pencil u P + v Q of symmetric 5x5 matrices.
struct SymmetricPencil {
  RationalMatrix P, Q;

  SymmetricPencil() = default;
  SymmetricPencil(RationalMatrix p, RationalMatrix q) : P(std::move(p)), Q(std::move(q)) {
    for (const auto* m : {&P, &Q})
      if (m->rows() != 5 || m->cols() != 5 || !m->is_symmetric())
        throw input_error("pencil matrices must be symmetric 5x5");
  }

  RationalMatrix member(const Rational& u, const Rational& v) const { return u * P + v * Q; }
};

/// Sign of the permutation p.
inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

/// Determinant of a square matrix of binary forms by the Leibniz sum.
inline BinaryForm form_determinant(const std::vector<std::vector<BinaryForm>>& m, int entry_degree) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BinaryForm det(n * entry_degree);
  do {
    BinaryForm term = make_form({1});
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      const BinaryForm& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      if (e.is_zero()) zero = true;
      else term = term * e;
    }
    if (zero) continue;
    det += permutation_sign(perm) > 0 ? term : term * Rational(-1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// det(u P + v Q) as a quintic in (u, v).
inline BinaryForm spectral_quintic(const SymmetricPencil& pencil) {
  std::vector<std::vector<BinaryForm>> m(5, std::vector<BinaryForm>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m[i][j] = linear_form(pencil.P(i, j), pencil.Q(i, j));
  BinaryForm f = form_determinant(m, 1);
  if (f.is_zero()) throw input_error("degenerate pencil");
  return f;
}

/// The pencil in the new basis u' P' + v' Q' with (u, v) = h (u', v'):
/// its spectral quintic is spectral_quintic(pencil) ∘ h.
inline SymmetricPencil change_basis(const SymmetricPencil& pencil, const Mobius& h) {
  return {h[0][0] * pencil.P + h[1][0] * pencil.Q, h[0][1] * pencil.P + h[1][1] * pencil.Q};
}

/// Congruence g M g^T applied to both members.
inline SymmetricPencil congruence(const SymmetricPencil& pencil, const RationalMatrix& g) {
  return {g * pencil.P * g.transpose(), g * pencil.Q * g.transpose()};
}

/// Rank of a matrix with entries in Q[x]/(phi), phi irreducible.
inline std::size_t rank_mod(std::vector<std::vector<UPoly>> m, const UPoly& phi) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (auto& row : m)
    for (auto& e : row) e = e % phi;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const auto [g, s, t] = extended_gcd(m[r][c], phi);
    if (g.degree() != 0) throw consistency_error("modulus is not irreducible");
    const UPoly inv = s;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const UPoly f = (m[i][c] * inv) % phi;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] - f * m[r][j]) % phi;
    }
    ++r;
  }
  return r;
}

struct DegeneracyRecord {
  BinaryForm factor;  // irreducible over the rationals, in (u, v)
  int multiplicity;
  int corank;
};

using DegeneracyProfile = std::vector<DegeneracyRecord>;

/// Corank of u P + v Q at the roots of the irreducible form phi(u, v).
inline int corank_at(const SymmetricPencil& pencil, const BinaryForm& phi) {
  if (phi.degree() == 1 && is_zero(phi[0])) return static_cast<int>(5 - rank(pencil.P));  // v = 0
  // Roots have v != 0; work with v = 1 and u = x in Q[x]/phi(x, 1).
  const UPoly mod = dehomogenize(phi);
  std::vector<std::vector<UPoly>> m(5, std::vector<UPoly>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m[i][j] = UPoly({pencil.Q(i, j), pencil.P(i, j)});
  return static_cast<int>(5 - rank_mod(std::move(m), mod));
}

/// Irreducible factors over the rationals of a nonzero binary form.
inline std::vector<FormFactor> irreducible_factors(const BinaryForm& f) {
  std::vector<FormFactor> out;
  for (const auto& [part, m] : squarefree_profile(f)) {
    if (part.degree() == 1 && is_zero(part[0])) {
      out.push_back({part, m});
      continue;
    }
    for (const auto& ff : factor_rational(dehomogenize(part))) {
      if (!ff.certified_irreducible) throw consistency_error("uncertified factor of a low-degree form");
      out.push_back({homogenize(ff.factor, ff.factor.degree()), m * ff.multiplicity});
    }
  }
  return out;
}

inline DegeneracyProfile degeneracy_profile(const SymmetricPencil& pencil) {
  const BinaryForm f = spectral_quintic(pencil);
  DegeneracyProfile out;
  for (const auto& [phi, m] : irreducible_factors(f)) out.push_back({phi, m, corank_at(pencil, phi)});
  return out;
}

enum class SurfaceLabel { smooth, one_A1, boundary_U, outside_U };

inline std::string to_string(SurfaceLabel s) {
  switch (s) {
    case SurfaceLabel::smooth: return "smooth";
    case SurfaceLabel::one_A1: return "one-A1";
    case SurfaceLabel::boundary_U: return "boundary-U";
    case SurfaceLabel::outside_U: return "outside-U";
  }
  return "outside-U";
}

/// smooth: every root simple with corank 1. one-A1: a single double root
/// of corank 1, the rest simple. outside-U: a root of multiplicity >= 3.
/// Everything else (two doubles, a double of corank 2, a simple root of
/// higher corank) is boundary-U and left for the caller to inspect.
inline SurfaceLabel classify_profile(const DegeneracyProfile& profile) {
  int doubles = 0;
  bool all_corank_one = true;
  for (const auto& r : profile) {
    if (r.multiplicity >= 3) return SurfaceLabel::outside_U;
    if (r.multiplicity == 2) doubles += r.factor.degree();
    if (r.corank != 1) all_corank_one = false;
  }
  if (doubles == 0 && all_corank_one) return SurfaceLabel::smooth;
  if (doubles == 1 && all_corank_one) return SurfaceLabel::one_A1;
  return SurfaceLabel::boundary_U;
}

inline SurfaceLabel classify_surface(const SymmetricPencil& pencil) {
  return classify_profile(degeneracy_profile(pencil));
}

/// Plane model: the Veronese conic points (r^2 : r : 1), the cubics through
/// them (tangent to the conic at a repeated parameter), and the pencil of
/// quadrics cutting out the image of the plane under those cubics.
struct BlowupModel {
  std::vector<Rational> parameters;
  std::vector<std::array<Rational, 3>> points;
  std::vector<MPoly> cubics;  // in X, Y, Z
};

namespace detail {

inline std::vector<std::array<int, 3>> plane_monomials(int degree) {
  std::vector<std::array<int, 3>> out;
  for (int i = degree; i >= 0; --i)
    for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
  return out;
}

inline MPoly plane_monomial(const std::array<int, 3>& e) {
  MPoly m = MPoly(1L);
  for (std::size_t k = 0; k < 3; ++k)
    for (int p = 0; p < e[k]; ++p) m *= MPoly::variable(k, 3);
  return m;
}

}  // namespace detail

inline std::pair<BlowupModel, SymmetricPencil> blowup_from_quintic(const std::vector<Rational>& r) {
  if (r.size() != 5) throw input_error("blow-up needs five parameters");
  std::map<Rational, int> count;
  for (const auto& x : r) ++count[x];
  int coincidences = 0;
  for (const auto& [x, c] : count) {
    if (c >= 3) throw input_error("unstable configuration");
    if (c == 2) ++coincidences;
  }
  if (coincidences > 1) throw input_error("at most one coincidence among the parameters is supported");

  BlowupModel model;
  model.parameters = r;
  for (const auto& x : r) model.points.push_back({x * x, x, Rational(1)});

  // On the conic a monomial X^i Y^j Z^k restricts to r^(2i+j).
  const auto mon3 = detail::plane_monomials(3);
  std::vector<RationalVector> rows;
  for (const auto& [x, c] : count) {
    RationalVector value, tangent;
    for (const auto& e : mon3) {
      const int w = 2 * e[0] + e[1];
      value.push_back(pow(x, w));
      tangent.push_back(w == 0 ? Rational(0) : Rational(w) * pow(x, w - 1));
    }
    rows.push_back(value);
    if (c == 2) rows.push_back(tangent);
  }
  const auto cubic_space = kernel_basis(from_rows(rows, mon3.size()));
  if (cubic_space.size() != 5) throw consistency_error("cubic system through the points is not 5-dimensional");
  for (const auto& v : cubic_space) {
    MPoly c;
    for (std::size_t k = 0; k < mon3.size(); ++k)
      if (!is_zero(v[k])) c += detail::plane_monomial(mon3[k]) * v[k];
    model.cubics.push_back(c);
  }

  // Quadric relations among the cubics: sum_{a<=b} l_ab c_a c_b = 0.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a; b < 5; ++b) pairs.emplace_back(a, b);
  const auto mon6 = detail::plane_monomials(6);
  std::map<MPoly::Exponents, std::size_t> index;
  for (std::size_t k = 0; k < mon6.size(); ++k) {
    MPoly::Exponents e(mon6[k].begin(), mon6[k].end());
    while (!e.empty() && e.back() == 0) e.pop_back();
    index[e] = k;
  }
  RationalMatrix rel(mon6.size(), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const MPoly prod = model.cubics[pairs[p].first] * model.cubics[pairs[p].second];
    for (const auto& [e, c] : prod.terms()) rel(index.at(e), p) = c;
  }
  const auto relations = kernel_basis(rel);
  if (relations.size() != 2) throw consistency_error("quadric relation space is not 2-dimensional");
  RationalMatrix mats[2] = {RationalMatrix(5, 5), RationalMatrix(5, 5)};
  for (std::size_t q = 0; q < 2; ++q)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [a, b] = pairs[p];
      if (a == b) {
        mats[q](a, a) = relations[q][p];
      } else {
        mats[q](a, b) = relations[q][p] / 2;
        mats[q](b, a) = relations[q][p] / 2;
      }
    }
  return {model, SymmetricPencil(mats[0], mats[1])};
}

/// Rational roots (x : 1), with multiplicity, of a split form after a
/// shear moves any root at infinity to a finite one.
inline std::vector<Rational> finite_rational_roots(const BinaryForm& f) {
  BinaryForm g = f;
  if (is_zero(f[0])) g = mobius_substitute(f, detail::nonvanishing_shear({&f}));
  std::vector<Rational> roots;
  for (const auto& ff : factor_rational(dehomogenize(g))) {
    if (ff.factor.degree() != 1) throw input_error("quintic does not split over the rationals");
    const Rational root = -ff.factor.coeff(0) / ff.factor.coeff(1);
    for (int k = 0; k < ff.multiplicity; ++k) roots.push_back(root);
  }
  return roots;
}

/// Whether the spectral quintic of the blow-up of the roots of f has the
/// moduli point of f.
inline bool roundtrip_check(const BinaryForm& f) {
  if (f.degree() != 5) throw input_error("round trip needs a quintic");
  const auto roots = finite_rational_roots(f);
  const auto [model, pencil] = blowup_from_quintic(roots);
  return moduli_point(spectral_quintic(pencil)) == moduli_point(f);
}

}  // namespace dp4
