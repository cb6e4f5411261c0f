#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tessera/structure.hpp"

using namespace tessera;

namespace {

RationalVector bracket(const TwistedAlgebra& t, const RationalVector& x, const RationalVector& y) {
  auto xy = t.product(AlgebraElement(x), AlgebraElement(y));
  auto yx = t.product(AlgebraElement(y), AlgebraElement(x));
  return ((xy - yx) * Rational(1, 2)).coeffs;
}

}  // namespace

TEST(Structure, CommutatorAlgebraMatchesProducts) {
  auto t = algebras::tesseranions();
  auto lie = commutator_algebra(t);
  auto jor = anticommutator_algebra(t);
  std::mt19937 rng(51);
  for (int i = 0; i < 20; ++i) {
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4);
    EXPECT_EQ(lie.multiply(x, y), bracket(t, x, y));
    auto xy = t.product(AlgebraElement(x), AlgebraElement(y));
    auto yx = t.product(AlgebraElement(y), AlgebraElement(x));
    EXPECT_EQ(jor.multiply(x, y), ((xy + yx) * Rational(1, 2)).coeffs);
  }
  EXPECT_TRUE(lie.is_antisymmetric());
  EXPECT_TRUE(jor.is_symmetric());
  // [v1,v2] = v3, [v2,v3] = v1, [v3,v1] = v0; v1.v1 = v3.v3 = v2, v2.v2 = -v0
  EXPECT_EQ(lie.product(1, 2), (RationalVector{0, 0, 0, 1}));
  EXPECT_EQ(lie.product(2, 3), (RationalVector{0, 1, 0, 0}));
  EXPECT_EQ(lie.product(3, 1), (RationalVector{1, 0, 0, 0}));
  EXPECT_EQ(jor.product(1, 1), (RationalVector{0, 0, 1, 0}));
  EXPECT_EQ(jor.product(3, 3), (RationalVector{0, 0, 1, 0}));
  EXPECT_EQ(jor.product(2, 2), (RationalVector{-1, 0, 0, 0}));
  EXPECT_TRUE(commutator_algebra(algebras::complex()).is_zero());
}

TEST(Structure, JacobiOnRandomTriples) {
  auto t = algebras::tesseranions();
  std::mt19937 rng(52);
  for (int i = 0; i < 30; ++i) {
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4), z = oracle::random_vector(rng, 4);
    auto a = bracket(t, x, bracket(t, y, z)), b = bracket(t, y, bracket(t, z, x)), c = bracket(t, z, bracket(t, x, y));
    for (int k = 0; k < 4; ++k) EXPECT_EQ(a[k] + b[k] + c[k], 0);
  }
  EXPECT_TRUE(jacobi_check(commutator_algebra(t)).holds);
  EXPECT_TRUE(jacobi_check(commutator_algebra(algebras::quaternions())).holds);
}

TEST(Structure, Series) {
  auto lie = commutator_algebra(algebras::tesseranions());
  auto derived = series(lie, SeriesKind::Derived);
  EXPECT_EQ(derived.dimensions(), (std::vector<std::size_t>{4, 3, 1, 0}));
  EXPECT_TRUE(derived.reaches_zero);
  auto lower = series(lie, SeriesKind::LowerCentral);
  EXPECT_EQ(lower.dimensions(), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_TRUE(lower.stabilized);
  EXPECT_FALSE(lower.reaches_zero);
  EXPECT_TRUE(heisenberg_ideal_check(lie));
  EXPECT_TRUE(is_ideal(lie, derived.terms[1]));
  // su(2) from the quaternions is perfect: [g, g] = g on the imaginary part.
  auto hq = series(commutator_algebra(algebras::quaternions()), SeriesKind::Derived);
  EXPECT_EQ(hq.dimensions(), (std::vector<std::size_t>{4, 3, 3}));
}

TEST(Structure, JordanResidualClosedForm) {
  auto jc = jordan_check(anticommutator_algebra(algebras::tesseranions()));
  ASSERT_FALSE(jc.holds);
  auto x = [&](int i) { return MultiPoly::variable(jc.vars, "x" + std::to_string(i)); };
  auto y = [&](int i) { return MultiPoly::variable(jc.vars, "y" + std::to_string(i)); };
  MultiPoly f = x(1) * x(1) + x(3) * x(3);
  ASSERT_EQ(jc.residual.size(), 4u);
  EXPECT_EQ(jc.residual[0], -(f * (y(1) * x(1) + y(3) * x(3))));
  EXPECT_EQ(jc.residual[1], f * x(1) * y(2));
  EXPECT_TRUE(jc.residual[2].is_zero());
  EXPECT_EQ(jc.residual[3], f * x(3) * y(2));
  EXPECT_EQ(jc.counterexample.size(), 2u);
}

TEST(Structure, JordanAlgebraLaws) {
  auto jor = anticommutator_algebra(algebras::tesseranions());
  EXPECT_TRUE(flexible_check(jor).holds);
  auto fp = fourth_power_check(jor);
  EXPECT_FALSE(fp.holds);
  ASSERT_FALSE(fp.counterexample.empty());
  auto x = fp.counterexample[0];
  auto x2 = jor.multiply(x, x);
  EXPECT_NE(jor.multiply(x2, x2), jor.multiply(jor.multiply(x2, x), x));
  EXPECT_FALSE(alternative_check(jor).holds);
  // The anticommutator algebra of an associative algebra is Jordan.
  EXPECT_TRUE(jordan_check(anticommutator_algebra(algebras::quaternions())).holds);
}

TEST(Structure, InversesAreChiral) {
  auto t = algebras::tesseranions();
  AlgebraElement w{0, 1, 0, 0};
  auto li = left_inverse(t, w), ri = right_inverse(t, w);
  EXPECT_EQ(t.product(li, w), t.one());
  EXPECT_EQ(t.product(w, ri), t.one());
  EXPECT_EQ(li, (AlgebraElement{0, 0, 0, 1}));
  EXPECT_EQ(ri, (AlgebraElement{0, 0, 0, -1}));
  auto result = chiral_inverse_check(t);
  EXPECT_EQ(result.kind, Chirality::Chiral);
  ASSERT_TRUE(result.witness.has_value());
  EXPECT_NE(left_inverse(t, *result.witness), right_inverse(t, *result.witness));
  EXPECT_EQ(chiral_inverse_check(algebras::quaternions()).kind, Chirality::TwoSided);
  EXPECT_THROW(left_inverse(t, t.zero()), std::domain_error);
}

TEST(Structure, Subspaces) {
  Subspace s(4, {{1, 1, 0, 0}, {2, 2, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_TRUE(s.contains({3, 3, -1, 0}));
  EXPECT_FALSE(s.contains({1, 0, 0, 0}));
  EXPECT_EQ(Subspace::span_of_basis(4, {0, 2}).dimension(), 2u);
}

TEST(Structure, InnerDerivations) {
  auto t = algebras::tesseranions();
  AlgebraElement w{0, 1, 0, 0};
  EXPECT_TRUE(inner_derivation_check(commutator_algebra(t), w.coeffs));
  EXPECT_FALSE(inner_derivation_check(t, w));
  EXPECT_TRUE(inner_derivation_check(algebras::quaternions(), w));
}
