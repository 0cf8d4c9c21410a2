#include <gtest/gtest.h>

#include <random>

#include "dp4/binary_form.hpp"
#include "dp4/factor.hpp"
#include "dp4/factor_search.hpp"
#include "dp4/matrix.hpp"
#include "dp4/mpoly.hpp"

using namespace dp4;

namespace {

Rational root_difference_disc(const std::vector<Rational>& roots) {
  Rational r = 1;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) r *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
  return r;
}

BinaryForm split_quintic() { return form_from_roots({0, -1, -2, -3, -4}); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("4/-2")), "-2");
  EXPECT_THROW(parse_rational("1/0"), input_error);
  EXPECT_THROW(parse_rational("abc"), input_error);
}

TEST(UPoly, DivisionAndGcd) {
  const UPoly a{-1, 0, 1};  // x^2 - 1
  const UPoly b{1, 1};      // x + 1
  EXPECT_EQ(a / b, (UPoly{-1, 1}));
  EXPECT_TRUE((a % b).is_zero());
  EXPECT_EQ(gcd(a, UPoly{2, 2}), b);
  auto [g, s, t] = extended_gcd(UPoly{1, 0, 1}, UPoly{0, 1});
  EXPECT_EQ(s * UPoly({1, 0, 1}) + t * UPoly({0, 1}), g);
}

TEST(UPoly, InterpolationRecoversPolynomial) {
  const UPoly p{3, -2, 0, 5};
  std::vector<Rational> xs, ys;
  for (long i = 0; i < 4; ++i) {
    xs.emplace_back(i * 2 - 3);
    ys.push_back(p(xs.back()));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(UPoly, ResultantMultiplicative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto rnd = [&](int d) {
      std::vector<Rational> c;
      for (int i = 0; i <= d; ++i) c.push_back(random_small_rational(rng));
      if (is_zero(c.back())) c.back() = 1;
      return UPoly(c);
    };
    const UPoly f = rnd(3), g = rnd(2), h = rnd(4);
    EXPECT_EQ(resultant(f * g, h), resultant(f, h) * resultant(g, h));
  }
}

TEST(BinaryForm, ResultantMultiplicativeHomogeneous) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryForm f = random_form(rng, 2), g = random_form(rng, 3), h = random_form(rng, 3);
    EXPECT_EQ(resultant(f * g, h), resultant(f, h) * resultant(g, h));
  }
}

TEST(Mobius, SwapReversesCoefficients) {
  const BinaryForm x5 = make_form({1, 0, 0, 0, 0, 0});
  EXPECT_EQ(mobius_substitute(x5, mobius(0, 1, 1, 0)), make_form({0, 0, 0, 0, 0, 1}));
}

TEST(Mobius, IdentityIsTrivial) {
  std::mt19937_64 rng(1);
  const BinaryForm f = random_form(rng, 5);
  EXPECT_EQ(mobius_substitute(f, mobius(1, 0, 0, 1)), f);
}

TEST(Mobius, AgreesWithPointwiseEvaluation) {
  std::mt19937_64 rng(2);
  const BinaryForm f = random_form(rng, 5);
  const Mobius g = random_mobius(rng);
  const BinaryForm fg = mobius_substitute(f, g);
  for (int i = 0; i < 20; ++i) {
    const Rational x = random_small_rational(rng, 20), y = random_small_rational(rng, 20);
    EXPECT_EQ(evaluate(fg, x, y), evaluate(f, g[0][0] * x + g[0][1] * y, g[1][0] * x + g[1][1] * y));
  }
}

TEST(Mobius, RightAction) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const BinaryForm f = random_form(rng, 5);
    const Mobius g = random_mobius(rng), h = random_mobius(rng);
    EXPECT_EQ(mobius_substitute(f, compose(g, h)), mobius_substitute(mobius_substitute(f, g), h));
  }
}

TEST(Mobius, SingularMatrixRejected) {
  EXPECT_THROW(mobius_substitute(make_form({1, 2}), mobius(1, 2, 2, 4)), input_error);
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(make_form({1, 0, 0, 0, 0, 0})), 0);
  EXPECT_EQ(discriminant(split_quintic()), root_difference_disc({0, -1, -2, -3, -4}));
  EXPECT_THROW(discriminant(make_form({1, 1})), input_error);
}

TEST(Discriminant, RootAtInfinity) {
  // y * (x - y)(x - 2y): roots 1, 2 and infinity; leading coefficient zero.
  const BinaryForm f = linear_form(0, 1) * form_from_roots({1, 2});
  EXPECT_NE(discriminant(f), 0);
  EXPECT_EQ(discriminant(f), discriminant(mobius_substitute(f, mobius(1, 0, 1, 1))));
  EXPECT_EQ(discriminant(linear_form(0, 1) * linear_form(0, 1) * linear_form(1, 1)), 0);
}

TEST(Discriminant, CovarianceLaw) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const BinaryForm f = random_form(rng, 5);
    const Mobius g = random_mobius(rng);
    EXPECT_EQ(discriminant(mobius_substitute(f, g)), pow(det(g), 20) * discriminant(f));
  }
}

TEST(Discriminant, VanishesIffRepeatedFactor) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    BinaryForm f = random_form(rng, 3, 2);
    if (i % 2) {
      f = f * random_form(rng, 1, 2) * random_form(rng, 1, 2);
    } else {
      f = f * linear_form(1, 1) * linear_form(2, 2);
    }
    if (f.is_zero()) continue;
    bool repeated = false;
    for (const auto& [g, m] : squarefree_profile(f))
      if (m >= 2) repeated = true;
    EXPECT_EQ(is_zero(discriminant(f)), repeated);
  }
}

TEST(SquarefreeProfile, Examples) {
  const BinaryForm x = linear_form(1, 0), xy = linear_form(1, 1);
  const auto prof = squarefree_profile(x * x * xy * xy * xy);
  ASSERT_EQ(prof.size(), 2u);
  EXPECT_TRUE(proportional(prof[0].factor, x));
  EXPECT_EQ(prof[0].multiplicity, 2);
  EXPECT_TRUE(proportional(prof[1].factor, xy));
  EXPECT_EQ(prof[1].multiplicity, 3);

  const auto single = squarefree_profile(split_quintic());
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(proportional(single[0].factor, split_quintic()));
  EXPECT_THROW(squarefree_profile(BinaryForm(3)), input_error);
}

TEST(SquarefreeProfile, ReconstructsRandomProducts) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 25; ++i) {
    const BinaryForm a = random_form(rng, 1), b = random_form(rng, 2), c = random_form(rng, 1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const BinaryForm f = a * a * a * b * c * c;
    const auto prof = squarefree_profile(f);
    EXPECT_TRUE(proportional(expand_profile(prof), f));
    for (std::size_t p = 0; p < prof.size(); ++p)
      for (std::size_t q = p + 1; q < prof.size(); ++q)
        EXPECT_NE(resultant(prof[p].factor, prof[q].factor), 0);
  }
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(RationalMatrix::identity(4)).empty());
  const auto k = kernel_basis(RationalMatrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (RationalVector{-1, 1}));
}

TEST(Kernel, PlantedRank) {
  std::mt19937_64 rng(7);
  for (std::size_t r = 0; r <= 5; ++r) {
    RationalMatrix a(7, r), b(r, 9);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = random_small_rational(rng);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < 9; ++j) b(i, j) = random_small_rational(rng);
    const RationalMatrix m = r ? a * b : RationalMatrix(7, 9);
    const std::size_t rk = rank(m);
    EXPECT_LE(rk, r);
    const auto k = kernel_basis(m);
    EXPECT_EQ(k.size(), 9 - rk);
    for (const auto& v : k)
      for (const auto& e : m.apply(v)) EXPECT_EQ(e, 0);
  }
}

TEST(Matrix, Determinant) {
  EXPECT_EQ(determinant(RationalMatrix{{2, 1}, {1, 3}}), 5);
  EXPECT_EQ(determinant(RationalMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(Factor, LowDegreeFactorsOverRationals) {
  // (2x - 3)(x^2 + 1)(x^2 - 2)
  const UPoly f = UPoly{-3, 2} * UPoly{1, 0, 1} * UPoly{-2, 0, 1};
  const auto fs = factor_rational(f);
  ASSERT_EQ(fs.size(), 3u);
  UPoly prod = UPoly::constant(1);
  for (const auto& ff : fs) {
    EXPECT_TRUE(ff.certified_irreducible);
    prod *= ff.factor;
  }
  EXPECT_EQ(prod.primitive(), f.primitive());
}

TEST(Factor, IrreducibleQuinticStaysWhole) {
  const auto fs = factor_rational(UPoly{-2, 0, 0, 0, 0, 1});
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].factor.degree(), 5);
  EXPECT_TRUE(fs[0].certified_irreducible);
}

TEST(Factor, QuadraticSplittingModPIsRecombined) {
  // x^4 + 1 splits into linears modulo many primes yet is irreducible.
  const auto fs = factor_rational(UPoly{1, 0, 0, 0, 1} * UPoly{5, 1});
  ASSERT_EQ(fs.size(), 2u);
  // (x^2 - 3)(x^2 + x + 7)(3x + 1) with large-ish coefficients
  const UPoly g = UPoly{-3, 0, 1} * UPoly{7, 1, 1} * UPoly{1, 3};
  EXPECT_EQ(factor_rational(g).size(), 3u);
}

TEST(Factor, RandomProducts) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    auto rnd = [&](int d) {
      std::vector<Rational> c;
      for (int k = 0; k <= d; ++k) c.push_back(random_small_rational(rng));
      if (is_zero(c.back())) c.back() = 3;
      return UPoly(c);
    };
    const UPoly f = rnd(1) * rnd(2) * rnd(2);
    const auto fs = factor_rational(f);
    UPoly prod = UPoly::constant(1);
    for (const auto& ff : fs)
      for (int m = 0; m < ff.multiplicity; ++m) prod *= ff.factor;
    EXPECT_EQ(prod.primitive(), f.primitive());
    EXPECT_GE(fs.size(), 2u);
  }
}

namespace {

BinaryForm st(std::initializer_list<long> c) { return make_form(c); }

/// Biform of (u,v)-degree 1: a(s,t) u + b(s,t) v.
BiForm linear_uv(const BinaryForm& a, const BinaryForm& b) { return BiForm(a.degree(), 1, 0, {a, b}); }

}  // namespace

TEST(FactorSearch, PlantedFactor) {
  const BiForm planted = linear_uv(st({1, 0}), st({0, -1}));  // u s - v t
  const BiForm G(2, 4, 0, {st({1, 0, 2}), st({0, 3, 1}), st({1, 1, 1}), st({-2, 0, 5}), st({1, 4, 0})});
  const BiForm F = planted * G;
  const auto found = factor_search_bounded(F, 1);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->n(), 1);
  EXPECT_TRUE(proportional(found->row(0), planted.row(0)) && proportional(found->row(1), planted.row(1)));
  EXPECT_EQ(found->row(0)[0] * planted.row(1)[1], found->row(1)[1] * planted.row(0)[0]);
}

TEST(FactorSearch, IrreducibleBinomial) {
  // s u^5 - t v^5
  const BiForm F(1, 5, 0, {st({1, 0}), BinaryForm(1), BinaryForm(1), BinaryForm(1), BinaryForm(1), st({0, -1})});
  EXPECT_FALSE(factor_search_bounded(F, 1).has_value());
  EXPECT_FALSE(factor_search_bounded(F, 2).has_value());
  // Oracle: fibers at several t are irreducible quintics over the rationals.
  for (long t = 2; t < 6; ++t) {
    const auto fs = factor_rational(dehomogenize(F.fiber(1, Rational(t))));
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].factor.degree(), 5);
  }
}

TEST(FactorSearch, RandomProductsRecoverFactor) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 1 + trial % 2;
    std::vector<BinaryForm> ra, rb;
    for (int j = 0; j <= k; ++j) ra.push_back(random_form(rng, 1, 5));
    for (int j = 0; j <= 5 - k; ++j) rb.push_back(random_form(rng, 2, 5));
    const BiForm A = biform_from_rows(1, 0, ra), B = biform_from_rows(2, 0, rb);
    const BiForm F = A * B;
    const auto found = factor_search_bounded(F, 2);
    ASSERT_TRUE(found.has_value());
    EXPECT_LE(found->n(), 2);
    // never a non-divisor: the search re-multiplies internally; confirm here
    // by checking that each fiber of the factor divides the fiber of F
    for (long s = -2; s <= 2; ++s) {
      const UPoly ff = dehomogenize(F.fiber(Rational(s), 1)), gf = dehomogenize(found->fiber(Rational(s), 1));
      if (gf.degree() >= 0 && !ff.is_zero()) {
        EXPECT_TRUE((ff % gf).is_zero());
      }
    }
  }
}

TEST(FactorSearch, TwistedContentAndV) {
  // t * (t u^2 + s v^2): content t is found first
  const BiForm F(2, 2, 0, {st({0, 0, 1}), BinaryForm(2), st({0, 1, 0})});
  const auto c = factor_search_bounded(F, 1);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->n(), 0);
  EXPECT_TRUE(proportional(c->row(0), st({0, 1})));
  // v * (t u + s v): leading u-coefficient vanishes
  const BiForm G(1, 2, 0, {BinaryForm(1), st({0, 1}), st({1, 0})});
  const auto v = factor_search_bounded(G, 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->n(), 1);
  EXPECT_TRUE(v->row(0).is_zero());
}

TEST(MPoly, SubstituteAndContent) {
  const MPoly x = MPoly::variable(0, 2), y = MPoly::variable(1, 2);
  const MPoly p = (x + y) * (x - y);
  EXPECT_EQ(p.substitute(1, x), MPoly(0L));
  EXPECT_EQ(((x + y) * Rational(6, 4)).content(), Rational(3, 2));
  EXPECT_EQ(p.content(), -1);
  const std::vector<Rational> pt{3, 2};
  EXPECT_EQ(p.evaluate(pt), 5);
}
