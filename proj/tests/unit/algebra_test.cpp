#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tessera/algebra.hpp"
#include "tessera/algebra_io.hpp"

using namespace tessera;

TEST(Algebra, TesseranionProductMatchesSignTable) {
  auto t = algebras::tesseranions();
  auto table = oracle::tesseranion_table();
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4);
    EXPECT_EQ(t.product(AlgebraElement(x), AlgebraElement(y)).coeffs, oracle::z4_product(table, x, y));
  }
}

TEST(Algebra, ZFourShapeMatchesGenericTable) {
  std::mt19937 rng(12);
  for (int mask = 0; mask < 64; mask += 7) {
    int s[6];
    for (int b = 0; b < 6; ++b) s[b] = (mask >> b) & 1 ? -1 : 1;
    TwistedAlgebra a(z4_shape(s[0], s[1], s[2], s[3], s[4], s[5]));
    auto table = oracle::z4_table(s[0], s[1], s[2], s[3], s[4], s[5]);
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4);
    EXPECT_EQ(a.product(AlgebraElement(x), AlgebraElement(y)).coeffs, oracle::z4_product(table, x, y));
  }
}

TEST(Algebra, QuaternionsAreHamiltonUpToBasis) {
  auto h = algebras::quaternions();
  // Associative, every non-identity basis element squares to -1, anticommuting units.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        auto va = h.basis(a), vb = h.basis(b), vc = h.basis(c);
        ASSERT_EQ(h.product(h.product(va, vb), vc), h.product(va, h.product(vb, vc)));
      }
  for (int a = 1; a < 4; ++a) EXPECT_EQ(h.product(h.basis(a), h.basis(a)), -h.one());
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b)
      if (a != b) EXPECT_EQ(h.product(h.basis(a), h.basis(b)), -h.product(h.basis(b), h.basis(a)));
  // Same multiplicative norm as Hamilton's algebra.
  std::mt19937 rng(13);
  for (int i = 0; i < 50; ++i) {
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4);
    auto n2 = [](const RationalVector& v) -> Rational { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]; };
    EXPECT_EQ(n2(h.product(AlgebraElement(x), AlgebraElement(y)).coeffs), n2(x) * n2(y));
    EXPECT_EQ(n2(oracle::hamilton(x, y)), n2(x) * n2(y));
  }
}

TEST(Algebra, ComplexNumbers) {
  auto c = algebras::complex();
  AlgebraElement x{2, 3}, y{-1, 4};
  EXPECT_EQ(c.product(x, y), (AlgebraElement{-14, 5}));
  EXPECT_EQ(c.product(x, y), c.product(y, x));
}

TEST(Algebra, LeftMatrixActsByRightFactor) {
  auto t = algebras::tesseranions();
  std::mt19937 rng(14);
  for (int i = 0; i < 30; ++i) {
    AlgebraElement x(oracle::random_vector(rng, 4)), y(oracle::random_vector(rng, 4));
    EXPECT_EQ(t.left_matrix(y).apply(x.coeffs), t.product(x, y).coeffs);
    EXPECT_EQ(t.right_matrix(x).apply(y.coeffs), t.product(x, y).coeffs);
  }
}

TEST(Algebra, UnitAndConjugation) {
  auto t = algebras::tesseranions();
  AlgebraElement x{1, 2, 3, 4};
  EXPECT_EQ(t.product(t.one(), x), x);
  EXPECT_EQ(t.product(x, t.one()), x);
  ASSERT_TRUE(t.supports_conjugation());
  EXPECT_EQ(t.conjugate(t.conjugate(x)), x);
  EXPECT_EQ(t.conjugate(x), (AlgebraElement{1, -2, -3, -4}));
}

TEST(Algebra, OppositeReversesProducts) {
  auto t = algebras::tesseranions();
  auto op = t.opposite();
  AlgebraElement x{1, -1, 2, 0}, y{0, 3, 1, -2};
  EXPECT_EQ(op.product(x, y), t.product(y, x));
}

TEST(Algebra, ModularReduction) {
  auto t = algebras::tesseranions(ScalarRing::mod_p(7));
  AlgebraElement x{6, 6, 0, 0};
  auto sq = t.product(x, x);
  for (const auto& c : sq.coeffs) {
    EXPECT_GE(c, 0);
    EXPECT_LT(c, 7);
  }
  EXPECT_EQ(ScalarRing::mod_p(7).inverse(3), 5);
  EXPECT_THROW(ScalarRing::mod_p(9), std::invalid_argument);
  EXPECT_TRUE(is_prime(257));
  EXPECT_FALSE(is_prime(1));
}

TEST(Algebra, StructureConstantPredicates) {
  auto c = tesseranion_constant();
  EXPECT_TRUE(c.is_unital());
  EXPECT_TRUE(c.is_sign_valued());
  EXPECT_EQ(c.transposed().transposed(), c);
  auto bad = StructureConstant::from_rows(FiniteGroup::make(GroupName::Z2), {{1, 2}, {1, -1}},
                                          BasisConvention::LeftStandard);
  EXPECT_FALSE(bad.is_sign_valued());
}

TEST(AlgebraIo, JsonRoundTrip) {
  auto t = algebras::tesseranions();
  auto j = algebra_to_json(t);
  auto back = algebra_from_json(j);
  EXPECT_EQ(back.constant(), t.constant());
  EXPECT_EQ(rational_from_json(rational_to_json(Rational(-7, 3))), Rational(-7, 3));
}

TEST(AlgebraIo, MalformedJsonRejected) {
  Json missing = Json{{"group", "Z4"}};
  EXPECT_ANY_THROW(algebra_from_json(missing));
  Json wrong_size = Json{{"group", "Z4"}, {"basis", "left-standard"}, {"C", {{1, 1}, {1, -1}}}};
  EXPECT_ANY_THROW(algebra_from_json(wrong_size));
}

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("-7/4"), Rational(-7, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_ANY_THROW(parse_rational("x"));
  Rational r;
  EXPECT_TRUE(rational_sqrt(Rational(49, 4), r));
  EXPECT_EQ(r, Rational(7, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), r));
}
