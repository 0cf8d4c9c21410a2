#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dp4/family.hpp"
#include "dp4/mpoly.hpp"

namespace dp4 {

/// Polynomials in (u, v, s, t): bidegree (a, b) means degree a in (u, v) and b in (s, t).
namespace detail {

inline int padded(const MPoly::Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

inline std::optional<std::pair<int, int>> bidegree(const MPoly& p) {
  std::optional<std::pair<int, int>> out;
  for (const auto& [e, c] : p.terms()) {
    std::pair<int, int> b{padded(e, 0) + padded(e, 1), padded(e, 2) + padded(e, 3)};
    if (out && *out != b) throw input_error("polynomial is not bihomogeneous");
    out = b;
  }
  return out;
}

inline bool has_bidegree(const MPoly& p, int a, int b) {
  const auto d = bidegree(p);
  return !d || *d == std::make_pair(a, b);
}

inline MPoly uvst_monomial(int i, int j, int k, int l, const Rational& c) { return MPoly::monomial({i, j, k, l}, c); }

inline MPoly random_biform(std::mt19937_64& rng, int a, int b, long bound = 9) {
  MPoly p;
  for (int i = 0; i <= a; ++i)
    for (int k = 0; k <= b; ++k) p += uvst_monomial(a - i, i, b - k, k, random_small_rational(rng, bound));
  return p;
}

/// Coefficient of u^(a-j) v^j as a binary form of degree b in (s, t).
inline BinaryForm uv_coefficient(const MPoly& p, int a, int j, int b) {
  BinaryForm f(b);
  for (const auto& [e, c] : p.terms())
    if (padded(e, 0) == a - j && padded(e, 1) == j) f[padded(e, 3)] += c;
  return f;
}

/// Exact divisibility of binary forms.
inline bool form_divides(const BinaryForm& g, const BinaryForm& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  const Mobius s = nonvanishing_shear({&g});
  const UPoly gs = dehomogenize(mobius_substitute(g, s)), fs = dehomogenize(mobius_substitute(f, s));
  return (fs % gs).is_zero();
}

}  // namespace detail

/// Symmetric 3x3 matrix of bihomogeneous forms in (u, v; s, t): A11, A12, A22 of
/// bidegree (0,1), A13, A23 of (1,2), A33 of (2,3).
struct ConicBundleSpec {
  std::array<std::array<MPoly, 3>, 3> A;
};

inline int conic_bidegree_u(std::size_t i, std::size_t j) { return (i == 2 ? 1 : 0) + (j == 2 ? 1 : 0); }
inline int conic_bidegree_st(std::size_t i, std::size_t j) { return 1 + conic_bidegree_u(i, j); }

inline void validate(const ConicBundleSpec& c) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(c.A[i][j] == c.A[j][i])) throw input_error("conic bundle matrix is not symmetric");
      if (!detail::has_bidegree(c.A[i][j], conic_bidegree_u(i, j), conic_bidegree_st(i, j)))
        throw input_error("bidegree mismatch in entry A" + std::to_string(i + 1) + std::to_string(j + 1));
    }
}

inline ConicBundleSpec random_conic_bundle(std::mt19937_64& rng) {
  ConicBundleSpec c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      c.A[i][j] = c.A[j][i] = detail::random_biform(rng, conic_bidegree_u(i, j), conic_bidegree_st(i, j));
  return c;
}

inline MPoly determinant(const ConicBundleSpec& c) {
  const auto& A = c.A;
  return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[1][2]) - A[0][1] * (A[0][1] * A[2][2] - A[1][2] * A[0][2]) +
         A[0][2] * (A[0][1] * A[1][2] - A[1][1] * A[0][2]);
}

struct ConicIdentityReport {
  bool identity = false;         // ac - b^2 = (A11 A22 - A12^2)(A13' A23'' - A13'' A23')^2
  bool branch_divides = false;   // A11 A22 - A12^2 divides the branch form of the discriminant curve
  std::pair<int, int> det_bidegree{0, 0};
  BiForm discriminant_curve;     // det A: rows are the u^2, uv, v^2 coefficients
  BinaryForm branch_form;        // of the double cover det A = 0 -> P^1_(s,t)
  BinaryForm base_branch;        // A11 A22 - A12^2
  int genus = 0;
};

inline ConicIdentityReport conic_identity_report(const ConicBundleSpec& c) {
  validate(c);
  const auto& A = c.A;
  ConicIdentityReport r;
  // -A11 A23^2 - A22 A13^2 + 2 A12 A23 A13 = a u^2 + 2 b uv + c v^2
  const MPoly q = A[0][0] * A[1][2] * A[1][2] * Rational(-1) - A[1][1] * A[0][2] * A[0][2] + A[0][1] * A[1][2] * A[0][2] * Rational(2);
  const BinaryForm a = detail::uv_coefficient(q, 2, 0, 5), c2 = detail::uv_coefficient(q, 2, 2, 5);
  const BinaryForm b = detail::uv_coefficient(q, 2, 1, 5) * Rational(1, 2);
  const auto part = [&](std::size_t i, int j) { return detail::uv_coefficient(A[i][2], 1, j, 2); };
  const BinaryForm m = detail::uv_coefficient(A[0][0] * A[1][1] - A[0][1] * A[0][1], 0, 0, 2);
  const BinaryForm w = part(0, 0) * part(1, 1) - part(0, 1) * part(1, 0);
  r.identity = a * c2 - b * b == m * w * w;
  const MPoly det = determinant(c);
  r.det_bidegree = detail::bidegree(det).value_or(std::make_pair(2, 5));
  std::vector<BinaryForm> rows;
  for (int j = 0; j <= 2; ++j) rows.push_back(detail::uv_coefficient(det, 2, j, 5));
  r.discriminant_curve = biform_from_rows(5, 0, rows);
  r.branch_form = rows[1] * rows[1] - rows[0] * rows[2] * Rational(4);
  r.base_branch = m;
  r.branch_divides = detail::form_divides(m, r.branch_form);
  r.genus = arithmetic_genus(HirzebruchClass{0, r.det_bidegree.first, r.det_bidegree.second});
  return r;
}

inline bool conic_identity_check(const ConicBundleSpec& c) {
  const auto r = conic_identity_report(c);
  return r.identity && r.branch_divides;
}

/// Named explicit families. Seeds drive std::mt19937_64; a draw failing the
/// genericity requirement is replaced by the next draw, up to kMaxAttempts.
struct BuiltExample {
  std::string name;
  std::uint64_t seed = 0;
  int attempts = 0;
  int expected_height = 0;
  std::optional<FamilySpec> family;
  std::optional<ConicBundleSpec> conic;
};

inline constexpr int kMaxAttempts = 10;

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"h8_ci", "h8_conic", "h10_ci", "h10_bundle"};
  return names;
}

namespace detail {
inline bool generic_enough(const FamilySpec& spec) {
  try {
    const auto flags = genericity_check(spec);
    return flags.g1 && flags.g2 == G2Status::certified;
  } catch (const input_error&) {
    return false;
  }
}
}  // namespace detail

inline BuiltExample build_example(const std::string& name, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BuiltExample ex{name, seed, 0, name.starts_with("h8") ? 8 : 10, std::nullopt, std::nullopt};
  for (ex.attempts = 1; ex.attempts <= kMaxAttempts; ++ex.attempts) {
    if (name == "h8_ci") {
      ex.family = family_from_ci(random_ci_p5(rng));
      if (detail::generic_enough(*ex.family)) return ex;
    } else if (name == "h10_ci") {
      ex.family = family_from_ci(random_ci_p4(rng, 0, 1));
      if (detail::generic_enough(*ex.family)) return ex;
    } else if (name == "h10_bundle") {
      ex.family = random_family(rng, {0, -1, -1, -1, -2}, {-3, -2});
      if (detail::generic_enough(*ex.family)) return ex;
    } else if (name == "h8_conic") {
      ex.conic = random_conic_bundle(rng);
      const auto r = conic_identity_report(*ex.conic);
      if (r.det_bidegree == std::make_pair(2, 5) && !is_zero(discriminant(r.branch_form))) return ex;
    } else {
      throw input_error("unknown example '" + name + "'");
    }
  }
  throw consistency_error("example " + name + " failed genericity after " + std::to_string(kMaxAttempts) + " draws");
}

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::vector<ExampleCheck> verify_example(const BuiltExample& ex) {
  std::vector<ExampleCheck> out;
  auto add = [&](std::string n, bool ok, std::string d) { out.push_back({std::move(n), ok, std::move(d)}); };
  if (ex.family) {
    const int h = height(*ex.family);
    add("height", h == ex.expected_height, std::to_string(h));
    const auto disc = discriminant_family(*ex.family);
    add("discriminant degree 2h", disc.degree == 2 * ex.expected_height, std::to_string(disc.degree));
    const auto cls = spectral_class(*ex.family);
    add("spectral genus h-4", arithmetic_genus(cls.cls) == ex.expected_height - 4, std::to_string(arithmetic_genus(cls.cls)));
    if (ex.expected_height == 8) add("spectral bidegree (2,5)", cls.cls.n == 0 && cls.cls.alpha == 2 && cls.cls.beta == 5,
                                     "n=" + std::to_string(cls.cls.n) + " alpha=" + std::to_string(cls.cls.alpha));
    const auto g = genericity_check(*ex.family);
    add("G1'", g.g1, g.g1 ? "square-free" : "repeated factor");
    add("G2'", g.g2 == G2Status::certified, to_string(g.g2));
  }
  if (ex.conic) {
    const auto r = conic_identity_report(*ex.conic);
    add("conic identity", r.identity, "ac-b^2 factorization");
    add("branch containment", r.branch_divides, "A11A22-A12^2 divides the branch form");
    add("discriminant bidegree (2,5)", r.det_bidegree == std::make_pair(2, 5),
        "(" + std::to_string(r.det_bidegree.first) + "," + std::to_string(r.det_bidegree.second) + ")");
    add("spectral genus 4", r.genus == 4, std::to_string(r.genus));
  }
  return out;
}

/// A1 = t I and A2 = diag(s + k t): the spectral cover splits into five
/// rational sections, so the irreducibility requirement fails.
inline FamilySpec split_diagonal_family() {
  FamilySpec spec;
  spec.d = {-2, -2, -2, -2, -2};
  spec.e = {-5, -5};
  for (auto& a : spec.A) a.assign(5, std::vector<BinaryForm>(5, BinaryForm(1)));
  for (std::size_t i = 0; i < 5; ++i) {
    spec.A[0][i][i] = make_form({0, 1});
    spec.A[1][i][i] = make_form({1, static_cast<long>(i)});
  }
  validate(spec);
  return spec;
}

/// A height-10 family whose fiber over s = 0 has a double eigenvalue, pulled
/// back along (s, t) -> (s^2, t^2): that discriminant root becomes a square.
inline FamilySpec squared_discriminant_family(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CompleteIntersectionP4 ci = random_ci_p4(rng, 0, 1);
  const long special[] = {1, 1, 2, 3, 4};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      ci.Q[0][i][j] = make_form({i == j ? 1 : 0});
      ci.Q[1][i][j] = BinaryForm(1, {ci.Q[1][i][j][0], Rational(i == j ? special[i] : 0)});
    }
  return pullback(family_from_ci(ci), make_form({1, 0, 0}), make_form({0, 0, 1}));
}

}  // namespace dp4
