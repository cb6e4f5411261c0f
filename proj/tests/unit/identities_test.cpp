#include <gtest/gtest.h>

#include <cctype>
#include <random>
#include <string>

#include "oracles.hpp"
#include "tessera/identities.hpp"

using namespace tessera;

namespace {

RationalVector eval_tree(const TwistedAlgebra& a, const BracketTree& t, const std::vector<RationalVector>& args) {
  if (t.is_leaf()) return args[static_cast<std::size_t>(t.variable())];
  return a.product(AlgebraElement(eval_tree(a, t.left(), args)), AlgebraElement(eval_tree(a, t.right(), args))).coeffs;
}

// Dimension of the identity space as the corank of the evaluation matrix at random points.
std::size_t numeric_dimension(const TwistedAlgebra& a, const DegreePattern& p) {
  auto monos = enumerate_monomials(p);
  std::mt19937 rng(41);
  std::vector<RationalVector> rows;
  for (int sample = 0; sample < 24; ++sample) {
    std::vector<RationalVector> args;
    for (int v = 0; v < p.nvars(); ++v) args.push_back(oracle::random_vector(rng, static_cast<std::size_t>(a.dim()), 3));
    std::vector<RationalVector> values;
    for (const auto& m : monos) values.push_back(eval_tree(a, m, args));
    for (int comp = 0; comp < a.dim(); ++comp) {
      RationalVector row;
      for (const auto& v : values) row.push_back(v[static_cast<std::size_t>(comp)]);
      rows.push_back(row);
    }
  }
  return monos.size() - oracle::rank(rows);
}

}  // namespace

TEST(Identities, CatalanAndMonomialCounts) {
  EXPECT_EQ(catalan(1), 1u);
  EXPECT_EQ(catalan(4), 14u);
  EXPECT_EQ(catalan(5), 42u);
  EXPECT_EQ(enumerate_monomials(DegreePattern::parse("2,1")).size(), 6u);
  EXPECT_EQ(enumerate_monomials(DegreePattern::parse("4")).size(), 5u);
  EXPECT_EQ(enumerate_monomials(DegreePattern::parse("2,2")).size(), 30u);
  EXPECT_EQ(enumerate_monomials(DegreePattern::parse("3,1")).size(), 20u);
  EXPECT_EQ(enumerate_monomials(DegreePattern::parse("6")).size(), 42u);
}

TEST(Identities, MonomialSerialization) {
  auto p = DegreePattern::parse("2,1");
  auto names = p.names();
  auto monos = enumerate_monomials(p);
  EXPECT_EQ(monos.front().serialize(names), "x(xy)");
  auto parsed = BracketTree::from_expr(Expr::parse("(x*y)*x"), names);
  EXPECT_EQ(parsed.serialize(names), "(xy)x");
  EXPECT_EQ(parsed.multidegree(2), (std::vector<int>{2, 1}));
}

using AlgebraPattern = std::pair<std::string, std::string>;

class IdentityDimensions : public ::testing::TestWithParam<AlgebraPattern> {};

TEST_P(IdentityDimensions, MatchesNumericRank) {
  auto [alg, pattern] = GetParam();
  auto a = algebras::by_name(alg);
  auto p = DegreePattern::parse(pattern);
  auto space = identity_space(a, p);
  EXPECT_EQ(space.dimension(), numeric_dimension(a, p));
  for (const auto& v : space.basis) {
    MonomialCombination combo;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) combo.terms.emplace_back(v[i], space.monomials[i]);
    EXPECT_TRUE(verify_identity(a, combo));
  }
}

INSTANTIATE_TEST_SUITE_P(Patterns, IdentityDimensions,
                         ::testing::Values(AlgebraPattern("tes", "2,1"), AlgebraPattern("tes", "4"),
                                           AlgebraPattern("tes", "2,2"), AlgebraPattern("tes", "3,1"),
                                           AlgebraPattern("tes", "5"), AlgebraPattern("quat", "2,1"),
                                           AlgebraPattern("quat", "2,2"), AlgebraPattern("complex", "3,1"),
                                           AlgebraPattern("tes-op", "2,2")),
                         [](const auto& info) {
                           std::string name = info.param.first + "_" + info.param.second;
                           for (auto& ch : name)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return name;
                         });

TEST(Identities, TesseranionDimensions) {
  auto t = algebras::tesseranions();
  EXPECT_EQ(identity_space(t, DegreePattern::parse("2,1")).dimension(), 1u);
  EXPECT_EQ(identity_space(t, DegreePattern::parse("4")).dimension(), 2u);
  EXPECT_EQ(identity_space(t, DegreePattern::parse("2,2")).dimension(), 14u);
  EXPECT_EQ(identity_space(t, DegreePattern::parse("3,1")).dimension(), 9u);
  EXPECT_EQ(identity_space(t, DegreePattern::parse("5")).dimension(), 9u);
  EXPECT_EQ(identity_space(t, DegreePattern::parse("6")).dimension(), 34u);
}

TEST(Identities, CatalogHoldsInTesseranions) {
  auto t = algebras::tesseranions();
  for (const auto& id : tesseranity_identities()) {
    auto parsed = Identity::parse(id.label, id.text);
    EXPECT_TRUE(verify_expression_identity(t, parsed)) << id.label;
    EXPECT_TRUE(verify_expression_identity(t.opposite(), parsed.mirror())) << id.label;
    // Residuals vanish identically, not only at sample points.
    for (const auto& r : identity_residuals(t, parsed))
      for (const auto& comp : r) EXPECT_TRUE(comp.is_zero()) << id.label;
  }
  EXPECT_EQ(tesseranity_identities().size(), 17u);
  EXPECT_FALSE(verify_expression_identity(t, Identity::parse("assoc", "x*(y*z) = (x*y)*z")));
}

TEST(Identities, ConjugateIdentities) {
  for (const char* name : {"tes", "tes-op", "quat", "complex", "real"}) {
    for (const auto& c : verify_conjugate_identities(algebras::by_name(name))) EXPECT_TRUE(c.holds) << name << " " << c.label;
  }
}

TEST(Identities, CoefficientFamiliesSpanTheirSpaces) {
  auto t = algebras::tesseranions();
  for (const auto& f : coefficient_families()) {
    if (f.pattern.total() > 5) continue;
    auto check = check_coefficient_family(t, f, 10, 5);
    EXPECT_TRUE(check.ok()) << f.label;
    EXPECT_EQ(check.free_coefficients, check.space_dimension) << f.label;
  }
}

TEST(Identities, CounterexamplesFalsify) {
  auto t = algebras::tesseranions();
  auto assoc = Identity::parse("assoc", "x*(y*z) = (x*y)*z");
  auto ce = find_counterexample(t, assoc);
  ASSERT_TRUE(ce.has_value());
  auto lhs = t.product((*ce)[0], t.product((*ce)[1], (*ce)[2]));
  auto rhs = t.product(t.product((*ce)[0], (*ce)[1]), (*ce)[2]);
  EXPECT_NE(lhs, rhs);
  EXPECT_FALSE(find_counterexample(algebras::quaternions(), assoc).has_value());
}

TEST(Identities, LoopProperties) {
  auto t = loop_property_suite(algebras::tesseranions());
  EXPECT_FALSE(t.holds("commutative"));
  EXPECT_FALSE(t.holds("associative"));
  EXPECT_FALSE(t.holds("flexible"));
  EXPECT_FALSE(t.holds("power_associative"));
  auto h = loop_property_suite(algebras::quaternions());
  EXPECT_TRUE(h.holds("associative"));
  EXPECT_TRUE(h.holds("moufang"));
  EXPECT_FALSE(h.holds("commutative"));
  EXPECT_TRUE(loop_property_suite(algebras::complex()).holds("commutative"));
}

TEST(Identities, PatternLimits) {
  EXPECT_EQ(DegreePattern::parse("3,1").total(), 4);
  EXPECT_EQ(DegreePattern::parse("2,2").to_string(), "2,2");
  EXPECT_ANY_THROW(DegreePattern::parse("a,b"));
}
