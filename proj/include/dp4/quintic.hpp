#pragma once

#include <array>
#include <mutex>
#include <string>

#include "dp4/binary_form.hpp"
#include "dp4/matrix.hpp"
#include "dp4/mpoly.hpp"

namespace dp4 {

/// r-th transvectant with the classical normalization
/// (m-r)!(n-r)!/(m!n!) * sum_k (-1)^k C(r,k) f_{x^(r-k) y^k} g_{x^k y^(r-k)}.
template <typename T>
BasicBinaryForm<T> transvectant(const BasicBinaryForm<T>& f, const BasicBinaryForm<T>& g, int r) {
  const int m = f.degree(), n = g.degree();
  if (r < 0 || r > m || r > n) throw input_error("transvectant order out of range");
  BasicBinaryForm<T> acc(m + n - 2 * r);
  for (int k = 0; k <= r; ++k) {
    BasicBinaryForm<T> fd = f, gd = g;
    for (int i = 0; i < r - k; ++i) fd = fd.dx();
    for (int i = 0; i < k; ++i) fd = fd.dy();
    for (int i = 0; i < k; ++i) gd = gd.dx();
    for (int i = 0; i < r - k; ++i) gd = gd.dy();
    Rational c(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)));
    if (k % 2) c = -c;
    acc += (fd * gd) * c;
  }
  const Rational scale = make_rational(factorial(static_cast<unsigned long>(m - r)) * factorial(static_cast<unsigned long>(n - r)),
                                       factorial(static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(n)));
  return acc * scale;
}

/// The raw invariants (I4, I8, I12, I18) of a quintic, built from the
/// covariants i = (f,f)_4, j = (f,i)_2, tau = (j,j)_2 and
/// alpha = (i^2, f)_4.
template <typename T>
std::array<T, 4> raw_invariants(const BasicBinaryForm<T>& f) {
  if (f.degree() != 5) throw input_error("invariants need a binary quintic");
  const auto i = transvectant(f, f, 4);
  const auto j = transvectant(f, i, 2);
  const auto tau = transvectant(j, j, 2);
  const auto alpha = transvectant(i * i, f, 4);
  const auto gamma = transvectant(i, alpha, 1);
  const auto delta = transvectant(tau, alpha, 1);
  return {transvectant(i, i, 2)[0], transvectant(i, tau, 2)[0], transvectant(tau, tau, 2)[0],
          transvectant(gamma, delta, 1)[0]};
}

/// Generic quintic with coefficients A0..A5 as polynomial variables.
inline BasicBinaryForm<MPoly> generic_quintic() {
  BasicBinaryForm<MPoly> f(5);
  for (int i = 0; i <= 5; ++i) f[i] = MPoly::variable(static_cast<std::size_t>(i), 6);
  return f;
}

namespace detail {
struct InvariantNormalization {
  std::array<Rational, 4> content;  // I_d = content_d * J_d
};

inline const InvariantNormalization& invariant_normalization() {
  static InvariantNormalization norm;
  static std::once_flag once;
  std::call_once(once, [] {
    const auto raw = raw_invariants(generic_quintic());
    for (std::size_t k = 0; k < 4; ++k) {
      if (raw[k].is_zero()) throw consistency_error("invariant vanishes identically");
      norm.content[k] = raw[k].content();
    }
  });
  return norm;
}
}  // namespace detail

/// Integral invariants J_d as polynomials in A0..A5 (primitive, integer
/// coefficients). Expensive; meant for audits.
inline std::array<MPoly, 4> symbolic_invariants() {
  auto raw = raw_invariants(generic_quintic());
  const auto& norm = detail::invariant_normalization();
  for (std::size_t k = 0; k < 4; ++k) raw[k] = raw[k] * (Rational(1) / norm.content[k]);
  return raw;
}

struct InvariantVector {
  Rational J4, J8, J12, J18;
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

inline InvariantVector invariants(const BinaryForm& f) {
  const auto raw = raw_invariants(f);
  const auto& c = detail::invariant_normalization().content;
  return {raw[0] / c[0], raw[1] / c[1], raw[2] / c[2], raw[3] / c[3]};
}

enum class StabilityLabel { all_simple, one_double, two_doubles, unstable };

inline std::string to_string(StabilityLabel s) {
  switch (s) {
    case StabilityLabel::all_simple: return "all-simple";
    case StabilityLabel::one_double: return "one-double";
    case StabilityLabel::two_doubles: return "two-doubles";
    case StabilityLabel::unstable: return "unstable";
  }
  return "unstable";
}

/// Reads the label off the square-free profile: the multiplicity-2 part
/// counts double roots by its degree.
inline StabilityLabel stability_classify(const BinaryForm& f) {
  int doubles = 0;
  for (const auto& [g, m] : squarefree_profile(f)) {
    if (m >= 3) return StabilityLabel::unstable;
    if (m == 2) doubles += g.degree();
  }
  if (doubles == 0) return StabilityLabel::all_simple;
  return doubles == 1 ? StabilityLabel::one_double : StabilityLabel::two_doubles;
}

/// Canonical representative of a point of P(1,2,3) under
/// (p1,p2,p3) -> (l p1, l^2 p2, l^3 p3).
struct ModuliPoint {
  std::array<Rational, 3> coords;
  /// "J4" (l = 1/J4), "J8J12" (l = J8/J12, so p2 = p3), "J8" or "J12"
  /// (the geometric point (0:1:0) or (0:0:1)).
  std::string chart;
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};

inline ModuliPoint normalize_weighted(const Rational& p1, const Rational& p2, const Rational& p3) {
  if (!is_zero(p1)) {
    const Rational l = Rational(1) / p1;
    return {{Rational(1), p2 * l * l, p3 * l * l * l}, "J4"};
  }
  if (!is_zero(p2) && !is_zero(p3)) {
    const Rational l = p2 / p3;
    return {{Rational(0), p2 * l * l, p3 * l * l * l}, "J8J12"};
  }
  if (!is_zero(p2)) return {{Rational(0), Rational(1), Rational(0)}, "J8"};
  if (!is_zero(p3)) return {{Rational(0), Rational(0), Rational(1)}, "J12"};
  throw input_error("degenerate invariant triple");
}

inline ModuliPoint moduli_point(const BinaryForm& f) {
  if (f.degree() != 5) throw input_error("moduli point needs a binary quintic");
  if (f.is_zero() || stability_classify(f) == StabilityLabel::unstable) throw input_error("not in U");
  const InvariantVector v = invariants(f);
  return normalize_weighted(v.J4, v.J8, v.J12);
}

namespace detail {

/// Exponents (a,b,c) with 4a + 8b + 12c = weight, in a fixed order.
inline std::vector<std::array<int, 3>> weighted_monomials(int weight) {
  std::vector<std::array<int, 3>> out;
  for (int c = 0; 12 * c <= weight; ++c)
    for (int b = 0; 12 * c + 8 * b <= weight; ++b) {
      const int rest = weight - 12 * c - 8 * b;
      if (rest % 4 == 0) out.push_back({rest / 4, b, c});
    }
  return out;
}

inline Rational eval_monomial(const std::array<int, 3>& e, const InvariantVector& v) {
  return pow(v.J4, e[0]) * pow(v.J8, e[1]) * pow(v.J12, e[2]);
}

/// Solves target = sum_k coef_k * basis_k exactly from sample rows; the
/// relation must be unique.
inline std::vector<Rational> fit_relation(const std::vector<std::vector<Rational>>& basis_rows,
                                          const std::vector<Rational>& target) {
  const std::size_t cols = basis_rows.front().size() + 1;
  RationalMatrix m(basis_rows.size(), cols);
  for (std::size_t i = 0; i < basis_rows.size(); ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) m(i, j) = basis_rows[i][j];
    m(i, cols - 1) = target[i];
  }
  const auto ker = kernel_basis(m);
  if (ker.size() != 1 || is_zero(ker[0][cols - 1])) throw consistency_error("invariant relation fit is inconsistent");
  std::vector<Rational> coef;
  for (std::size_t j = 0; j + 1 < cols; ++j) coef.push_back(-ker[0][j] / ker[0][cols - 1]);
  return coef;
}

inline std::vector<BinaryForm> fitting_sample(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BinaryForm> out;
  while (out.size() < count) {
    BinaryForm f = random_form(rng, 5);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

/// Constants with disc = c1 J4^2 + c2 J8 on quintics, from a one-time
/// exact fit on seeded samples (cached).
struct DiscRelation {
  Rational c1, c2;
};

inline DiscRelation fit_disc_relation(const std::vector<BinaryForm>& sample) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> target;
  for (const auto& f : sample) {
    const InvariantVector v = invariants(f);
    rows.push_back({v.J4 * v.J4, v.J8});
    target.push_back(discriminant(f));
  }
  const auto c = detail::fit_relation(rows, target);
  return {c[0], c[1]};
}

inline const DiscRelation& disc_as_invariant() {
  static DiscRelation rel;
  static std::once_flag once;
  std::call_once(once, [] { rel = fit_disc_relation(detail::fitting_sample(12, 20240601)); });
  return rel;
}

/// J18^2 as a combination of the weight-36 monomials J4^a J8^b J12^c.
struct Syzygy {
  std::vector<std::array<int, 3>> monomials;
  std::vector<Rational> coefficients;

  Rational evaluate(const InvariantVector& v) const {
    Rational acc = 0;
    for (std::size_t k = 0; k < monomials.size(); ++k) acc += coefficients[k] * detail::eval_monomial(monomials[k], v);
    return acc;
  }
  bool holds(const InvariantVector& v) const { return evaluate(v) == v.J18 * v.J18; }
};

inline Syzygy fit_syzygy(const std::vector<BinaryForm>& sample) {
  Syzygy s;
  s.monomials = detail::weighted_monomials(36);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> target;
  for (const auto& f : sample) {
    const InvariantVector v = invariants(f);
    std::vector<Rational> row;
    for (const auto& e : s.monomials) row.push_back(detail::eval_monomial(e, v));
    rows.push_back(std::move(row));
    target.push_back(v.J18 * v.J18);
  }
  s.coefficients = detail::fit_relation(rows, target);
  return s;
}

inline const Syzygy& j18_syzygy() {
  static Syzygy syz;
  static std::once_flag once;
  std::call_once(once, [] { syz = fit_syzygy(detail::fitting_sample(300, 20240602)); });
  return syz;
}

}  // namespace dp4
