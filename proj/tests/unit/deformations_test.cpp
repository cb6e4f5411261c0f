#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tessera/deformations.hpp"
#include "tessera/determinant.hpp"

using namespace tessera;

namespace {

Rational oracle_det(const ParametricConstant& p, const RationalVector& y) {
  TwistedAlgebra a(p.constant());
  auto mul = [&](const RationalVector& u, const RationalVector& v) {
    return a.product(AlgebraElement(u), AlgebraElement(v)).coeffs;
  };
  return oracle::leibniz_det(oracle::left_matrix(mul, y));
}

}  // namespace

TEST(Deformations, GenericDeterminantFormula) {
  EXPECT_EQ(generic_left_determinant(), left_determinant_formula());
  auto formula = left_determinant_formula();
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < 20; ++i) {
    ParametricConstant p;
    for (Rational* r : {&p.alpha, &p.beta, &p.delta, &p.epsilon, &p.phi, &p.omega}) {
      int v = d(rng);
      *r = v == 0 ? 1 : v;
    }
    auto y = oracle::random_vector(rng, 4, 3);
    RationalVector point{p.alpha, p.beta, p.delta, p.epsilon, p.phi, p.omega, y[0], y[1], y[2], y[3]};
    EXPECT_EQ(formula.evaluate(point), oracle_det(p, y));
  }
}

TEST(Deformations, FamiliesPassThroughTheTesseranions) {
  ASSERT_EQ(families().size(), 8u);
  for (const auto& f : families()) {
    EXPECT_EQ(family_constant(f.id, 1), ParametricConstant::tesseranion()) << f.name;
    EXPECT_EQ(family_constant(f.id, 1).constant(), tesseranion_constant());
  }
  EXPECT_THROW(family_constant(9, 2), std::out_of_range);
  EXPECT_THROW(family_constant(1, 0), std::invalid_argument);
}

TEST(Deformations, ValidityPredicates) {
  for (int id = 1; id <= 3; ++id) {
    EXPECT_TRUE(family_valid(id, 1000));
    EXPECT_FALSE(family_valid(id, -1));
  }
  // 3k^2 + 6k - 1 > 0 iff k > (-3 + 2 sqrt 3) / 3 ~ 0.1547
  EXPECT_FALSE(family_valid(4, Rational(3, 20)));
  EXPECT_TRUE(family_valid(4, Rational(4, 25)));
  // k^2 - 6k - 3 <= 0 iff k <= 3 + 2 sqrt 3 ~ 6.464
  for (int id = 5; id <= 8; ++id) {
    EXPECT_TRUE(family_valid(id, Rational(646, 100)));
    EXPECT_FALSE(family_valid(id, Rational(647, 100)));
  }
}

TEST(Deformations, NecessaryConditionsAndCertificates) {
  for (int id = 1; id <= 8; ++id)
    for (const Rational& k : {Rational(2), Rational(1, 2)}) {
      auto p = family_constant(id, k);
      EXPECT_TRUE(neccons_check(p).passes);
      auto rep = analyze_deformation(p);
      EXPECT_EQ(rep.status, DeformationStatus::Certified) << id << " " << k;
      ASSERT_TRUE(rep.left.certificate.has_value());
      EXPECT_TRUE(verify_sos(rep.left.determinant, *rep.left.certificate));
      EXPECT_EQ(rep.left.determinant, det_left(p.constant()));
    }
}

TEST(Deformations, InvalidParametersHaveVerifiedWitnesses) {
  for (int id = 5; id <= 8; ++id) {
    auto p = family_constant(id, 100);
    auto rep = analyze_deformation(p);
    EXPECT_EQ(rep.status, DeformationStatus::ZeroDivisor);
    const auto& side = rep.left.witness ? rep.left : rep.right;
    ASSERT_TRUE(side.witness.has_value());
    EXPECT_TRUE(verify_witness(side.determinant, *side.witness));
  }
  EXPECT_EQ(status_string(DeformationStatus::NoWitnessFound), "no-witness-found");
}

TEST(Deformations, NecessaryConditionViolationsAlwaysHaveWitnesses) {
  std::mt19937 rng(72);
  std::uniform_int_distribution<int> d(0, 3);
  const int vals[] = {-2, -1, 1, 2};
  int tested = 0;
  for (int i = 0; i < 200 && tested < 40; ++i) {
    ParametricConstant p;
    for (Rational* r : {&p.alpha, &p.beta, &p.delta, &p.epsilon, &p.phi, &p.omega}) *r = vals[d(rng)];
    if (neccons_check(p).passes) continue;
    ++tested;
    EXPECT_TRUE(witness_search(p).has_value()) << p.to_string();
  }
  EXPECT_GT(tested, 0);
  ParametricConstant zero;
  zero.beta = 0;
  EXPECT_THROW(neccons_check(zero), std::invalid_argument);
}

TEST(Deformations, EpsilonProbe) {
  auto probe = epsilon_probe();
  EXPECT_EQ(probe.parameters.epsilon, -1);
  EXPECT_EQ(probe.restriction, UniPoly({Rational(4), 0, 0, 0, Rational(-1)}));
  EXPECT_EQ(probe.value_at_root_squared, 0);
  EXPECT_EQ(probe.roots.size(), 2u);
  EXPECT_FALSE(neccons_check(probe.parameters).passes);
}

TEST(Deformations, KInverseIsomorphism) {
  for (int k : {1, 4, 9}) EXPECT_TRUE(k_inverse_isomorphism(k).matches()) << k;
  EXPECT_THROW(k_inverse_isomorphism(2), std::invalid_argument);
}

TEST(Deformations, CommutatorRescaling) {
  auto r7 = commutator_rescaling(7);
  ASSERT_TRUE(r7.u.has_value());
  EXPECT_EQ(*r7.u, Rational(1, 2));
  EXPECT_TRUE(r7.v1_v3_matches);
  EXPECT_FALSE(r7.v1_v2_matches);
  auto r49 = commutator_rescaling(49);
  ASSERT_TRUE(r49.u.has_value());
  EXPECT_EQ(*r49.u, Rational(1, 5));
  EXPECT_TRUE(r49.matches());
  EXPECT_FALSE(commutator_rescaling(2).u.has_value());
}

TEST(Deformations, RebasingEvidence) {
  auto same = nonisomorphism_evidence(4, Rational(1, 4), 2);
  EXPECT_TRUE(same.rebasing_found());
  auto different = nonisomorphism_evidence(4, 9, 2);
  EXPECT_FALSE(different.rebasing_found());
  EXPECT_GT(different.generators_tested, 0u);
  auto t = algebras::tesseranions();
  auto rebased = rebased_constant(t, AlgebraElement{0, 1, 0, 0});
  ASSERT_TRUE(rebased.has_value());
  EXPECT_FALSE(rebased_constant(t, AlgebraElement{1, 0, 0, 0}).has_value());
}
