#include <gtest/gtest.h>

#include <random>

#include "dp4/quintic.hpp"

using namespace dp4;

namespace {

BinaryForm split_quintic() { return form_from_roots({0, -1, -2, -3, -4}); }

BinaryForm random_quintic(std::mt19937_64& rng) {
  while (true) {
    BinaryForm f = random_form(rng, 5);
    if (!f.is_zero() && !is_zero(discriminant(f))) return f;
  }
}

}  // namespace

TEST(Transvectant, ZerothIsProduct) {
  std::mt19937_64 rng(1);
  const BinaryForm f = random_form(rng, 3), g = random_form(rng, 4);
  EXPECT_EQ(transvectant(f, g, 0), f * g);
}

TEST(Transvectant, OddSelfTransvectantsVanish) {
  std::mt19937_64 rng(2);
  const BinaryForm f = random_form(rng, 5);
  for (int r : {1, 3, 5}) EXPECT_TRUE(transvectant(f, f, r).is_zero());
}

TEST(Transvectant, CayleyOperatorOracle) {
  // (x^2, y^2)_2 = (0!0!/(2!2!)) * sum_k (-1)^k C(2,k) d^2f/dx^(2-k)dy^k d^2g/dx^k dy^(2-k)
  // only k = 0 survives: f_xx g_yy = 2 * 2 = 4, scaled by 1/4.
  const BinaryForm x2 = make_form({1, 0, 0}), y2 = make_form({0, 0, 1});
  const BinaryForm t = transvectant(x2, y2, 2);
  ASSERT_EQ(t.degree(), 0);
  EXPECT_EQ(t[0], 1);
  // (xy, xy)_2: -2 * f_xy g_xy / 4 with f_xy = 1 -> -1/2
  EXPECT_EQ(transvectant(make_form({0, 1, 0}), make_form({0, 1, 0}), 2)[0], Rational(-1, 2));
}

TEST(Transvectant, SymmetryAndBilinearity) {
  std::mt19937_64 rng(3);
  const BinaryForm f = random_form(rng, 4), g = random_form(rng, 5), h = random_form(rng, 5);
  for (int r = 0; r <= 4; ++r) {
    const BinaryForm a = transvectant(f, g, r), b = transvectant(g, f, r);
    EXPECT_EQ(a, r % 2 ? b * Rational(-1) : b);
    EXPECT_EQ(transvectant(f, g + h * Rational(3), r), a + transvectant(f, h, r) * Rational(3));
  }
  EXPECT_THROW(transvectant(f, g, 5), input_error);
}

TEST(Invariants, IntegralAndPrimitive) {
  for (const auto& J : symbolic_invariants()) {
    EXPECT_EQ(J.content(), 1);
    for (const auto& [e, c] : J.terms()) EXPECT_EQ(c.get_den(), 1);
  }
}

TEST(Invariants, SymbolicDegrees) {
  const auto J = symbolic_invariants();
  const int degrees[] = {4, 8, 12, 18};
  for (std::size_t k = 0; k < 4; ++k)
    for (const auto& [e, c] : J[k].terms()) {
      int d = 0;
      for (int v : e) d += v;
      EXPECT_EQ(d, degrees[k]);
    }
}

TEST(Invariants, UnimodularInvariance) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const BinaryForm f = random_form(rng, 5);
    const InvariantVector v = invariants(f);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(invariants(mobius_substitute(f, random_unimodular(rng))), v);
  }
}

TEST(Invariants, DeterminantWeight) {
  std::mt19937_64 rng(5);
  const BinaryForm f = random_form(rng, 5);
  const Mobius g = random_mobius(rng);
  const Rational d = det(g);
  const InvariantVector a = invariants(f), b = invariants(mobius_substitute(f, g));
  EXPECT_EQ(b.J4, pow(d, 10) * a.J4);
  EXPECT_EQ(b.J8, pow(d, 20) * a.J8);
  EXPECT_EQ(b.J12, pow(d, 30) * a.J12);
  EXPECT_EQ(b.J18, pow(d, 45) * a.J18);
}

TEST(Invariants, Homogeneity) {
  std::mt19937_64 rng(6);
  const BinaryForm f = random_form(rng, 5);
  const Rational c(-3, 2);
  const InvariantVector a = invariants(f), b = invariants(f * c);
  EXPECT_EQ(b.J4, pow(c, 4) * a.J4);
  EXPECT_EQ(b.J8, pow(c, 8) * a.J8);
  EXPECT_EQ(b.J12, pow(c, 12) * a.J12);
  EXPECT_EQ(b.J18, pow(c, 18) * a.J18);
  EXPECT_THROW(invariants(make_form({1, 2, 3})), input_error);
}

TEST(Invariants, GeneratorsAreAlgebraicallyIndependent) {
  std::mt19937_64 rng(7);
  RationalMatrix m(6, 5);
  for (std::size_t i = 0; i < 6; ++i) {
    const InvariantVector v = invariants(random_quintic(rng));
    m(i, 0) = v.J4 * v.J4 * v.J4;
    m(i, 1) = v.J4 * v.J8;
    m(i, 2) = v.J12;
    m(i, 3) = v.J4 * v.J4;
    m(i, 4) = v.J8;
  }
  RationalMatrix deg12(6, 3), deg8(6, 2);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 3; ++j) deg12(i, j) = m(i, j);
    for (std::size_t j = 0; j < 2; ++j) deg8(i, j) = m(i, j + 3);
  }
  EXPECT_EQ(rank(deg12), 3u);
  EXPECT_EQ(rank(deg8), 2u);
}

TEST(Invariants, J18IsNotZero) {
  std::mt19937_64 rng(8);
  EXPECT_NE(invariants(random_quintic(rng)).J18, 0);
}

TEST(Syzygy, HoldsOnFreshSamples) {
  const Syzygy& syz = j18_syzygy();
  EXPECT_EQ(syz.monomials.size(), 12u);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(syz.holds(invariants(random_form(rng, 5))));
  EXPECT_TRUE(syz.holds(invariants(split_quintic())));
}

TEST(DiscRelation, MatchesDiscriminant) {
  const DiscRelation& rel = disc_as_invariant();
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const BinaryForm f = random_form(rng, 5);
    const InvariantVector v = invariants(f);
    EXPECT_EQ(rel.c1 * v.J4 * v.J4 + rel.c2 * v.J8, discriminant(f));
  }
}

TEST(DiscRelation, Examples) {
  const DiscRelation& rel = disc_as_invariant();
  const InvariantVector d = invariants(form_from_roots({0, 0, 1, 2, 3}));
  EXPECT_EQ(rel.c1 * d.J4 * d.J4 + rel.c2 * d.J8, 0);
  // root-difference product oracle for roots {0,-1,-2,-3,-4}
  Rational prod = 1;
  const long r[] = {0, -1, -2, -3, -4};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) prod *= Rational((r[i] - r[j]) * (r[i] - r[j]));
  const InvariantVector s = invariants(split_quintic());
  EXPECT_EQ(rel.c1 * s.J4 * s.J4 + rel.c2 * s.J8, prod);
}

TEST(DiscRelation, RescaledInvariantsRescaleConstants) {
  std::vector<BinaryForm> sample;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) sample.push_back(random_form(rng, 5));
  const DiscRelation base = fit_disc_relation(sample);
  // disc(2f) = 2^8 disc(f) while J4^2 and J8 also scale by 2^8: fitting
  // on doubled forms gives the same constants.
  std::vector<BinaryForm> doubled;
  for (const auto& f : sample) doubled.push_back(f * Rational(2));
  const DiscRelation again = fit_disc_relation(doubled);
  EXPECT_EQ(again.c1, base.c1);
  EXPECT_EQ(again.c2, base.c2);
}

TEST(Moduli, WeightedNormalization) {
  const ModuliPoint p = normalize_weighted(2, 12, 40);
  EXPECT_EQ(p.coords, (std::array<Rational, 3>{1, 3, 5}));
  EXPECT_EQ(p.chart, "J4");
  const ModuliPoint q = normalize_weighted(0, 3, 5), r = normalize_weighted(0, 12, 40);
  EXPECT_EQ(q, r);
  EXPECT_EQ(q.coords[1], q.coords[2]);
  EXPECT_THROW(normalize_weighted(0, 0, 0), input_error);
}

TEST(Moduli, OrbitInvariance) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10; ++i) {
    const BinaryForm f = random_quintic(rng);
    EXPECT_EQ(moduli_point(mobius_substitute(f, random_mobius(rng))), moduli_point(f));
  }
}

TEST(Moduli, DistinctRandomQuinticsSeparate) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    const BinaryForm f = random_quintic(rng), g = random_quintic(rng);
    if (proportional(f, g)) continue;
    EXPECT_NE(moduli_point(f), moduli_point(g));
  }
}

TEST(Moduli, UnstableRejected) {
  EXPECT_THROW(moduli_point(form_from_roots({0, 0, 0, 1, 2})), input_error);
  EXPECT_NO_THROW(moduli_point(form_from_roots({0, 0, 1, 1, 2})));
}

TEST(Stability, Examples) {
  EXPECT_EQ(stability_classify(split_quintic()), StabilityLabel::all_simple);
  EXPECT_EQ(stability_classify(form_from_roots({0, 0, -1, -2, -3})), StabilityLabel::one_double);
  EXPECT_EQ(stability_classify(make_form({0, 0, 0, 1, 0, 0})), StabilityLabel::unstable);
  EXPECT_EQ(stability_classify(form_from_roots({0, 0, 1, 1, 2})), StabilityLabel::two_doubles);
  // an irrational double pair: (x^2 - 2y^2)^2 * x
  const BinaryForm q = make_form({1, 0, -2});
  EXPECT_EQ(stability_classify(q * q * linear_form(1, 0)), StabilityLabel::two_doubles);
}

TEST(Stability, InvariantUnderMobiusAndMatchesDisc) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 30; ++i) {
    // linear factors with tiny coefficients collide often
    BinaryForm f = random_form(rng, 1, 1);
    for (int k = 0; k < 4; ++k) f = f * random_form(rng, 1, 1);
    if (f.is_zero()) continue;
    const StabilityLabel s = stability_classify(f);
    EXPECT_EQ(stability_classify(mobius_substitute(f, random_mobius(rng))), s);
    EXPECT_EQ(is_zero(discriminant(f)), s != StabilityLabel::all_simple);
  }
}
