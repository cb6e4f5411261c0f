#include <gtest/gtest.h>

#include "tessera/cohomology.hpp"

using namespace tessera;

namespace {

// Sign s with a.b = s b.a, read off basis products.
int commutation_sign(const TwistedAlgebra& t, int a, int b) {
  auto ab = t.product(t.basis(a), t.basis(b));
  auto ba = t.product(t.basis(b), t.basis(a));
  return ab == ba ? 1 : (ab == -ba ? -1 : 0);
}

int association_sign(const TwistedAlgebra& t, int a, int b, int c) {
  auto left = t.product(t.basis(a), t.product(t.basis(b), t.basis(c)));
  auto right = t.product(t.product(t.basis(a), t.basis(b)), t.basis(c));
  return left == right ? 1 : (left == -right ? -1 : 0);
}

}  // namespace

class CohomologyOracle : public ::testing::TestWithParam<const char*> {};

TEST_P(CohomologyOracle, SignFunctionsMatchBasisProducts) {
  auto t = algebras::by_name(GetParam());
  auto q = q_function(t.constant());
  auto r = r_function(t.constant());
  int n = t.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      EXPECT_EQ(q(a, b), commutation_sign(t, a, b));
      for (int c = 0; c < n; ++c) EXPECT_EQ(r(a, b, c), association_sign(t, a, b, c));
    }
  EXPECT_TRUE(q_matches_products(t, q));
  EXPECT_TRUE(r_matches_products(t, r));
  EXPECT_TRUE(reversal_identity(r));
  EXPECT_TRUE(is_2cocycle(q));
}

INSTANTIATE_TEST_SUITE_P(Named, CohomologyOracle, ::testing::Values("real", "complex", "quat", "tes"));

TEST(Cohomology, QuaternionClosedForms) {
  auto c = quaternion_constant();
  auto q = q_function(c);
  EXPECT_EQ(constant_signs(c), closed_form::quaternion_constant());
  EXPECT_EQ(q, closed_form::quaternion_q());
  EXPECT_EQ(r_function(c), closed_form::quaternion_r());
  EXPECT_TRUE(r_function(c).is_trivial());
  EXPECT_TRUE(is_coboundary_of(q, closed_form::quaternion_kappa()));
  EXPECT_TRUE(is_separable(q));
  EXPECT_TRUE(cyclic_identity(r_function(c)));
}

TEST(Cohomology, TesseranionClosedForms) {
  auto c = tesseranion_constant();
  auto q = q_function(c);
  EXPECT_EQ(constant_signs(c), closed_form::tesseranion_constant());
  EXPECT_EQ(q, closed_form::tesseranion_q());
  EXPECT_EQ(r_function(c), closed_form::tesseranion_r());
  EXPECT_TRUE(is_coboundary_of(q, closed_form::tesseranion_kappa()));
  EXPECT_FALSE(r_function(c).is_trivial());
}

TEST(Cohomology, TesseranionQIsNotSeparable) {
  auto q = q_function(tesseranion_constant());
  auto v = separability_violation(q);
  ASSERT_TRUE(v.has_value());
  auto [g, h, t] = *v;
  const auto& grp = q.group();
  EXPECT_NE(q(h, t) * q(grp.mul(g, h), t) * q(g, t), 1);
  EXPECT_FALSE(is_separable(q));
}

TEST(Cohomology, KappaSearchFindsACoboundary) {
  for (auto c : {quaternion_constant(), tesseranion_constant()}) {
    auto q = q_function(c);
    auto kappa = find_coboundary_kappa(q);
    ASSERT_TRUE(kappa.has_value());
    EXPECT_TRUE(is_coboundary_of(q, *kappa));
  }
}

TEST(Cohomology, CocycleViolationIsReported) {
  auto g = FiniteGroup::make(GroupName::Z2xZ2);
  std::vector<int> values(16, 1);
  values[1 * 4 + 1] = -1;  // q((1,0),(1,0)) = -1 alone breaks the cocycle identity
  SignFunction2 q(g, values);
  auto v = cocycle_violation(q);
  ASSERT_TRUE(v.has_value());
  EXPECT_FALSE(is_2cocycle(q));
}

TEST(Cohomology, ParitySign) {
  EXPECT_EQ(parity_sign(3, 1), -1);
  EXPECT_EQ(parity_sign(4, 2), 1);
  EXPECT_THROW(parity_sign(3, 2), std::domain_error);
}
