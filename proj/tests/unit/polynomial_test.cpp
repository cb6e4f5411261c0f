#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tessera/determinant.hpp"
#include "tessera/positivity.hpp"
#include "tessera/univariate.hpp"

using namespace tessera;

namespace {

RationalVector random_point(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  RationalVector p(n);
  for (auto& c : p) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return p;
}

}  // namespace

TEST(MultiPoly, ArithmeticAgreesWithEvaluation) {
  auto vars = make_vars("y", 3);
  auto y0 = MultiPoly::variable(vars, 0), y1 = MultiPoly::variable(vars, 1), y2 = MultiPoly::variable(vars, 2);
  MultiPoly p = y0 * y0 - y1 * y2 * Rational(3) + MultiPoly(vars, 2);
  MultiPoly q = y1 * y1 * y1 + y0 * Rational(1, 2);
  std::mt19937 rng(21);
  for (int i = 0; i < 25; ++i) {
    auto pt = random_point(rng, 3);
    EXPECT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
    EXPECT_EQ((p - q).evaluate(pt), p.evaluate(pt) - q.evaluate(pt));
  }
  EXPECT_EQ((p * q).total_degree(), 5);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE((y0 * y1).is_homogeneous());
}

TEST(MultiPoly, ExactDivision) {
  auto vars = make_vars("y", 2);
  auto a = MultiPoly::variable(vars, 0), b = MultiPoly::variable(vars, 1);
  auto prod = (a + b) * (a - b * Rational(2));
  auto q = divide_exact(prod, a + b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a - b * Rational(2));
  EXPECT_FALSE(divide_exact(prod, a + b * Rational(5)).has_value());
}

TEST(MultiPoly, SpecializeAndCompose) {
  auto vars = make_vars("y", 2);
  auto a = MultiPoly::variable(vars, 0), b = MultiPoly::variable(vars, 1);
  auto p = a * a * b - b;
  auto s = p.specialize({{"y1", Rational(2)}});
  EXPECT_EQ(s.evaluate({Rational(3), Rational(0)}), Rational(16));
  auto t = make_vars("t", 1);
  auto tv = MultiPoly::variable(t, 0);
  auto c = p.compose({tv, tv}, t);
  EXPECT_EQ(c, tv * tv * tv - tv);
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
}

TEST(UniPoly, SturmCountsAndIsolation) {
  // (s^2 - 2)(s - 3) has three real roots, two irrational.
  UniPoly p({Rational(6), Rational(-2), Rational(-3), Rational(1)});
  EXPECT_EQ(count_real_roots(p), 3);
  auto roots = isolate_real_roots(p, Rational(1, 1 << 20));
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& r : roots) {
    double mid = (r.lo.get_d() + r.hi.get_d()) / 2;
    EXPECT_NEAR(mid * mid * mid - 3 * mid * mid - 2 * mid + 6, 0.0, 1e-4);
  }
  UniPoly none({Rational(1), Rational(0), Rational(1)});
  EXPECT_EQ(count_real_roots(none), 0);
  EXPECT_FALSE(univariate_real_root_exists(none));
  auto enc = nth_root_enclosure(Rational(16), 4, Rational(1, 1000));
  EXPECT_LE(enc.lo, 2);
  EXPECT_GE(enc.hi, 2);
}

TEST(UniPoly, GcdAndSquareFree) {
  UniPoly a({Rational(-1), Rational(0), Rational(1)});  // s^2 - 1
  UniPoly b({Rational(1), Rational(1)});                  // s + 1
  auto g = gcd(a * b, a);
  EXPECT_EQ(g.degree(), 2);
  EXPECT_EQ(square_free_part(a * b).degree(), 2);
}

class DeterminantOracle : public ::testing::TestWithParam<int> {};

TEST_P(DeterminantOracle, SymbolicDetsAgreeWithLeibnizAtRandomPoints) {
  int mask = GetParam();
  int s[6];
  for (int b = 0; b < 6; ++b) s[b] = (mask >> b) & 1 ? -1 : 1;
  auto c = z4_shape(s[0], s[1], s[2], s[3], s[4], s[5]);
  auto table = oracle::z4_table(s[0], s[1], s[2], s[3], s[4], s[5]);
  auto dl = det_left(c), dr = det_right(c);
  std::mt19937 rng(static_cast<unsigned>(mask));
  for (int i = 0; i < 6; ++i) {
    auto y = oracle::random_vector(rng, 4, 4);
    auto mul = [&](const RationalVector& a, const RationalVector& b) { return oracle::z4_product(table, a, b); };
    auto mirrored = [&](const RationalVector& a, const RationalVector& b) { return oracle::z4_product(table, b, a); };
    EXPECT_EQ(dl.evaluate(y), oracle::leibniz_det(oracle::left_matrix(mul, y)));
    EXPECT_EQ(dr.evaluate(y), oracle::leibniz_det(oracle::left_matrix(mirrored, y)));
  }
}

INSTANTIATE_TEST_SUITE_P(ZFourShapes, DeterminantOracle, ::testing::Range(0, 64, 5));

TEST(Determinant, BareissMatchesLaplace) {
  auto vars = component_vars(4);
  TwistedAlgebra t(tesseranion_constant());
  auto lifted = lift_constant(t.constant(), vars);
  auto m = symbolic_left_matrix(lifted, t.group(), vars);
  EXPECT_EQ(symbolic_det(m), laplace_det(m));
  EXPECT_EQ(symbolic_det(m), det_left(t.constant()));
}

TEST(Positivity, SosCertificatesVerifyAndDefiniteness) {
  auto vars = component_vars(4);
  auto y = [&](std::size_t i) { return MultiPoly::variable(vars, i); };
  MultiPoly t = det_left(tesseranion_constant());
  auto cert = find_sos(t);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_sos(t, *cert));
  EXPECT_TRUE(certificate_is_definite(*cert, 4));

  // A^2 + B^2 with a nonzero real common zero: an SOS, yet not definite.
  MultiPoly a = y(0) * y(0) - y(2) * y(2) + y(1) * y(3) * Rational(2);
  MultiPoly b = y(1) * y(1) - y(3) * y(3) - y(0) * y(2) * Rational(2);
  SosCertificate semidefinite{{{Rational(1), a}, {Rational(1), b}}};
  EXPECT_TRUE(verify_sos(a * a + b * b, semidefinite));
  EXPECT_FALSE(certificate_is_definite(semidefinite, 4));
  SosCertificate wrong{{{Rational(1), a}}};
  EXPECT_FALSE(verify_sos(a * a + b * b, wrong));
}

TEST(Positivity, WitnessesAreChecked) {
  auto vars = component_vars(2);
  auto y0 = MultiPoly::variable(vars, 0), y1 = MultiPoly::variable(vars, 1);
  MultiPoly p = y0 * y0 - y1 * y1 * Rational(2);
  auto w = find_sign_change(p);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(p, *w));
  SignChangeWitness forged = *w;
  forged.positive_value += 1;
  EXPECT_FALSE(verify_witness(p, forged));

  // (y0^2 - 2 y1^2)^2 never changes sign; its zero set is found on a slice.
  MultiPoly sq = p * p;
  EXPECT_FALSE(find_sign_change(sq).has_value());
  auto slice = find_slice_root(sq);
  ASSERT_TRUE(slice.has_value());
  EXPECT_TRUE(verify_witness(sq, *slice));
  EXPECT_FALSE(find_zero_witness(y0 * y0 + y1 * y1).has_value());
}
