#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tessera/norms.hpp"

using namespace tessera;

namespace {

double norm_d(const RationalVector& x) {
  double e = x[0].get_d() * x[0].get_d() + x[2].get_d() * x[2].get_d();
  double o = x[1].get_d() * x[1].get_d() + x[3].get_d() * x[3].get_d();
  return std::pow(e * e + o * o, 0.25);
}

}  // namespace

TEST(Norms, QuarticNormIsTheLeftDeterminant) {
  auto table = oracle::tesseranion_table();
  auto mul = [&](const RationalVector& a, const RationalVector& b) { return oracle::z4_product(table, a, b); };
  std::mt19937 rng(61);
  for (int i = 0; i < 30; ++i) {
    auto x = oracle::random_vector(rng, 4);
    EXPECT_EQ(quartic_norm4(AlgebraElement(x)), oracle::leibniz_det(oracle::left_matrix(mul, x)));
  }
  EXPECT_EQ(quartic_norm4(AlgebraElement{1, 1, 0, 0}), 2);
  EXPECT_EQ(quartic_norm4(AlgebraElement{1, 1, 1, 0}), 5);
  EXPECT_NEAR(quartic_norm(AlgebraElement{1, 1, 1, 0}).float_root, std::pow(5.0, 0.25), 1e-12);
}

TEST(Norms, QuarticExpressionsAgree) {
  EXPECT_EQ(quartic_norm_expressions().size(), 5u);
  EXPECT_TRUE(quartic_norm_expressions_agree());
  auto products = quartic_norm_products(AlgebraElement{1, 2, -1, 3});
  Rational n4 = quartic_norm4(AlgebraElement{1, 2, -1, 3});
  for (const auto& p : products) EXPECT_EQ(p, (AlgebraElement{n4, 0, 0, 0}));
}

TEST(Norms, SchwarzDefects) {
  AlgebraElement p{1, 1, 0, 0}, q{1, -1, 0, 0}, s{1, 1, 1, 0}, t{1, -1, 1, 0};
  EXPECT_EQ(schwarz_defect4(p, p), -16);
  EXPECT_EQ(schwarz_defect4(p, q), 0);
  EXPECT_EQ(schwarz_defect4(s, t), 8);
  EXPECT_TRUE(quaternion_schwarz_symbolic());
}

TEST(Norms, PureFactorsAreMultiplicative) {
  std::mt19937 rng(62);
  for (int i = 0; i < 40; ++i) {
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4);
    x[1] = 0;
    x[3] = 0;
    EXPECT_TRUE(is_pure_even(AlgebraElement(x)));
    EXPECT_EQ(schwarz_equality_pure(AlgebraElement(x), AlgebraElement(y)), 0);
  }
  EXPECT_THROW(schwarz_equality_pure(AlgebraElement{1, 1, 0, 0}, AlgebraElement{1, 1, 0, 0}), std::invalid_argument);
}

TEST(Norms, TriangleDefectsAgainstDoubles) {
  AlgebraElement p{1, 1, 0, 0}, q{1, -1, 0, 0}, s{1, 1, 1, 0}, t{1, -1, 1, 0};
  EXPECT_NEAR(triangle_defect(p, q), 2 * (std::pow(2.0, 0.25) - 1), 1e-12);
  EXPECT_NEAR(triangle_defect(s, t), 2 * (std::pow(5.0, 0.25) - std::sqrt(2.0)), 1e-12);
  std::mt19937 rng(63);
  for (int i = 0; i < 20; ++i) {
    auto x = oracle::random_vector(rng, 4), y = oracle::random_vector(rng, 4);
    RationalVector sum(4);
    for (int k = 0; k < 4; ++k) sum[k] = x[k] + y[k];
    EXPECT_NEAR(triangle_defect(AlgebraElement(x), AlgebraElement(y)), norm_d(x) + norm_d(y) - norm_d(sum), 1e-9);
  }
}

TEST(Norms, IteratedNorms) {
  auto m1 = iterated_norm({1, 2}, {Rational(3), Rational(4)});
  EXPECT_EQ(m1.power, 25);
  EXPECT_DOUBLE_EQ(m1.value, 5.0);
  auto m2 = iterated_norm({2, 2}, {Rational(1), Rational(0), Rational(1), Rational(0)});
  EXPECT_NEAR(m2.value, std::pow(2.0, 0.25), 1e-12);
  EXPECT_EQ(IteratedNormSpec({3, 2}).input_length(), 8u);
  EXPECT_EQ(IteratedNormSpec({3, 2}).exponent(), 8u);
  EXPECT_TRUE(iterated_norm_matches_quartic());
  EXPECT_THROW(iterated_norm({2, 1}, {Rational(1)}), std::invalid_argument);
}

TEST(Norms, TriangleAndHomogeneity) {
  for (unsigned j = 1; j <= 3; ++j)
    for (std::size_t n = 1; n <= 2; ++n) {
      auto tri = triangle_check({j, n}, 500, 7);
      EXPECT_TRUE(tri.holds());
      EXPECT_EQ(tri.samples, 500u);
      EXPECT_TRUE(positive_homogeneity_check({j, n}, 200, 7).holds());
    }
}

TEST(Norms, RootSumComparison) {
  // 1 + 1 >= 16^(1/4) is tight; 1 + 1 >= 15^(1/4) strict; 1 + 1 >= 17^(1/4) violated.
  EXPECT_EQ(root_sum_compare(1, 1, 16, 4), Comparison::Tight);
  EXPECT_EQ(root_sum_compare(1, 1, 15, 4), Comparison::Holds);
  EXPECT_EQ(root_sum_compare(1, 1, 17, 4), Comparison::Violated);
  EXPECT_EQ(root_sum_compare(2, 3, 20, 4), Comparison::Holds);
}

TEST(Norms, InverseFormulasMatchLinearSolves) {
  auto t = algebras::tesseranions();
  std::mt19937 rng(64);
  for (int i = 0; i < 30; ++i) {
    AlgebraElement x(oracle::random_vector(rng, 4));
    if (x.is_zero()) continue;
    auto [li, ri] = inverse_formulas(x);
    EXPECT_EQ(t.product(li, x), t.one());
    EXPECT_EQ(t.product(x, ri), t.one());
  }
  EXPECT_THROW(inverse_formulas(AlgebraElement{0, 0, 0, 0}), std::domain_error);
}

TEST(Norms, ConjugateProductAndGeneration) {
  EXPECT_TRUE(pure_even_associativity());
  EXPECT_TRUE(conjugate_product_identity());
  EXPECT_TRUE(generates_algebra(AlgebraElement{0, 1, 0, 0}));
  EXPECT_FALSE(generates_algebra(AlgebraElement{1, 0, 1, 0}));
  EXPECT_NE(generation_determinant(AlgebraElement{0, 1, 0, 0}), 0);
}

TEST(Cipher, KnownVectorsAndRoundTrips) {
  TesseranionCipher left(257, {1, 1, 0, 0});
  EXPECT_EQ(left.encrypt({5, 6, 7, 8}), (AlgebraElement{6, 0, 7, 1}));
  EXPECT_EQ(left.decrypt(AlgebraElement{6, 0, 7, 1}), (AlgebraElement{5, 6, 7, 8}));
  TesseranionCipher right(257, {1, 1, 0, 0}, CipherSide::Right);
  EXPECT_EQ(right.encrypt({5, 6, 7, 8}), (AlgebraElement{255, 8, 256, 7}));
  std::mt19937 rng(65);
  std::uniform_int_distribution<int> d(0, 100);
  for (int i = 0; i < 100; ++i) {
    RationalVector m{d(rng), d(rng), d(rng), d(rng)};
    EXPECT_EQ(left.decrypt(left.encrypt(m)).coeffs, m);
    EXPECT_EQ(right.decrypt(right.encrypt(m)).coeffs, m);
  }
  EXPECT_TRUE(cipher_identities_hold());
}

TEST(Cipher, DecryptionIsMultiplicationByTheKey) {
  // Independent check mod p: a . x == m for the left form.
  TesseranionCipher c(101, {3, 1, 4, 1});
  auto table = oracle::tesseranion_table();
  RationalVector m{9, 2, 6, 5};
  auto x = c.encrypt(m).coeffs;
  auto ax = oracle::z4_product(table, {3, 1, 4, 1}, x);
  for (auto& v : ax) {
    mpz_class r = mpz_class(v.get_num()) % 101;
    if (r < 0) r += 101;
    v = r;
  }
  EXPECT_EQ(ax, m);
}

TEST(Cipher, InvalidKeysRejected) {
  EXPECT_THROW(TesseranionCipher(2, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(TesseranionCipher(15, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(TesseranionCipher(5, {1, 0, 2, 0}), std::invalid_argument);  // (1 + 4)^2 = 0 mod 5
  EXPECT_THROW(TesseranionCipher(257, {0, 0, 0, 0}), std::invalid_argument);
}
