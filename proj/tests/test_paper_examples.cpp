#include <gtest/gtest.h>

#include "dp4/paper_examples.hpp"

using namespace dp4;

namespace {
bool all_pass(const std::vector<ExampleCheck>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}
}  // namespace

TEST(ConicBundle, IdentityOnSeededInstances) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    const auto c = random_conic_bundle(rng);
    const auto r = conic_identity_report(c);
    EXPECT_TRUE(r.identity) << seed;
    EXPECT_TRUE(r.branch_divides) << seed;
    EXPECT_EQ(r.det_bidegree, std::make_pair(2, 5)) << seed;
    EXPECT_EQ(r.branch_form.degree(), 10);
    EXPECT_EQ(r.genus, 4);
    EXPECT_TRUE(conic_identity_check(c));
  }
}

TEST(ConicBundle, RankDropCaseVanishes) {
  std::mt19937_64 rng(3);
  auto c = random_conic_bundle(rng);
  // Keep only the u-parts of A13 and A23.
  for (std::size_t i = 0; i < 2; ++i) {
    MPoly upart;
    for (const auto& [e, coef] : c.A[i][2].terms())
      if (detail::padded(e, 0) == 1) upart += MPoly::monomial(e, coef);
    c.A[i][2] = c.A[2][i] = upart;
  }
  const auto& A = c.A;
  const MPoly q = A[0][0] * A[1][2] * A[1][2] * Rational(-1) - A[1][1] * A[0][2] * A[0][2] + A[0][1] * A[1][2] * A[0][2] * Rational(2);
  const BinaryForm a = detail::uv_coefficient(q, 2, 0, 5), cc = detail::uv_coefficient(q, 2, 2, 5);
  const BinaryForm b = detail::uv_coefficient(q, 2, 1, 5) * Rational(1, 2);
  EXPECT_TRUE((a * cc - b * b).is_zero());
  EXPECT_TRUE(conic_identity_report(c).identity);
}

TEST(ConicBundle, RejectsWrongBidegree) {
  std::mt19937_64 rng(5);
  auto c = random_conic_bundle(rng);
  c.A[0][0] = c.A[0][0] * MPoly::variable(0, 4);
  EXPECT_THROW(conic_identity_check(c), input_error);
  auto d = random_conic_bundle(rng);
  d.A[0][1] = d.A[0][1] + MPoly::monomial({0, 0, 1, 0}, 1);
  EXPECT_THROW(validate(d), input_error);
}

TEST(ConicBundle, BranchDivisibilityDetectsNonDivisor) {
  EXPECT_TRUE(detail::form_divides(make_form({1, 0, -1}), make_form({1, 0, -1}) * make_form({2, 3, 5})));
  EXPECT_FALSE(detail::form_divides(make_form({1, 0, -1}), make_form({1, 0, 1}) * make_form({2, 3, 5})));
  EXPECT_TRUE(detail::form_divides(make_form({0, 1}), make_form({0, 0, 1})));
}

TEST(Examples, HeightTenCompleteIntersection) {
  const auto ex = build_example("h10_ci", 1);
  ASSERT_TRUE(ex.family);
  EXPECT_EQ(height(*ex.family), 10);
  EXPECT_EQ(discriminant_family(*ex.family).degree, 20);
  EXPECT_TRUE(genericity_check(*ex.family).g1);
  EXPECT_TRUE(all_pass(verify_example(ex)));
}

TEST(Examples, HeightEightCompleteIntersection) {
  const auto ex = build_example("h8_ci", 1);
  ASSERT_TRUE(ex.family);
  EXPECT_EQ(height(*ex.family), 8);
  EXPECT_EQ(discriminant_family(*ex.family).degree, 16);
  const auto cls = spectral_class(*ex.family).cls;
  EXPECT_EQ(cls.n, 0);
  EXPECT_EQ(cls.alpha, 2);
  EXPECT_EQ(cls.beta, 5);
  EXPECT_TRUE(all_pass(verify_example(ex)));
}

TEST(Examples, HeightEightConicBundle) {
  const auto ex = build_example("h8_conic", 1);
  ASSERT_TRUE(ex.conic);
  EXPECT_TRUE(conic_identity_check(*ex.conic));
  EXPECT_EQ(conic_identity_report(*ex.conic).det_bidegree, std::make_pair(2, 5));
  EXPECT_TRUE(all_pass(verify_example(ex)));
}

TEST(Examples, HeightTenBundleCandidate) {
  const auto ex = build_example("h10_bundle", 1);
  ASSERT_TRUE(ex.family);
  EXPECT_EQ(height(*ex.family), 10);
  EXPECT_EQ(discriminant_family(*ex.family).degree, 20);
  EXPECT_TRUE(all_pass(verify_example(ex)));
}

TEST(Examples, CatalogSeedsAndGenus) {
  for (const auto& name : example_names())
    for (std::uint64_t seed = 2; seed <= 3; ++seed) {
      const auto ex = build_example(name, seed);
      EXPECT_TRUE(all_pass(verify_example(ex))) << name << " " << seed;
      if (ex.family) {
        EXPECT_EQ(arithmetic_genus(spectral_class(*ex.family).cls), ex.expected_height - 4);
      }
    }
  EXPECT_THROW(build_example("h12", 1), input_error);
}

TEST(Examples, Deterministic) {
  const auto a = build_example("h10_ci", 4), b = build_example("h10_ci", 4);
  EXPECT_EQ(spectral_form(*a.family), spectral_form(*b.family));
}
