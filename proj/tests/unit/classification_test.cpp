#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tessera/classification.hpp"
#include "tessera/determinant.hpp"

using namespace tessera;

namespace {

// det M^L(y) from the raw table, by Leibniz expansion.
Rational oracle_det(const StructureConstant& c, const RationalVector& y) {
  TwistedAlgebra a(c);
  auto mul = [&](const RationalVector& u, const RationalVector& v) {
    return a.product(AlgebraElement(u), AlgebraElement(v)).coeffs;
  };
  return oracle::leibniz_det(oracle::left_matrix(mul, y));
}

}  // namespace

TEST(Classification, CandidateCounts) {
  auto z4 = FiniteGroup::make(GroupName::Z4);
  EXPECT_EQ(enumerate_candidates(z4, BasisConvention::LeftStandard, CandidateMode::Shaped).size(), 64u);
  EXPECT_EQ(enumerate_candidates(z4, BasisConvention::LeftStandard, CandidateMode::Raw).size(), 512u);
  auto k = FiniteGroup::make(GroupName::Z2xZ2);
  EXPECT_EQ(enumerate_candidates(k, BasisConvention::RightStandard, CandidateMode::Shaped).size(), 32u);
  auto z2 = FiniteGroup::make(GroupName::Z2);
  EXPECT_EQ(enumerate_candidates(z2, BasisConvention::LeftStandard, CandidateMode::Shaped).size(), 2u);
}

TEST(Classification, ZFourShapedHasTheTesseranionsAsSoleSurvivor) {
  auto report = classify(FiniteGroup::make(GroupName::Z4), BasisConvention::LeftStandard, CandidateMode::Shaped);
  ASSERT_EQ(report.survivors.size(), 1u);
  EXPECT_EQ(report.survivors[0].candidate.constant, tesseranion_constant());
  EXPECT_EQ(report.rejected.size(), 63u);
  EXPECT_TRUE(report.undetermined.empty());
  EXPECT_TRUE(verify_report(report));
}

TEST(Classification, KleinRightHasTheQuaternionsAsSoleSurvivor) {
  auto report = classify(FiniteGroup::make(GroupName::Z2xZ2), BasisConvention::RightStandard, CandidateMode::Shaped);
  ASSERT_EQ(report.survivors.size(), 1u);
  EXPECT_EQ(report.survivors[0].candidate.constant, quaternion_constant());
  EXPECT_EQ(report.rejected.size(), 31u);
}

TEST(Classification, WitnessPointsAgreeWithOracleDeterminant) {
  auto report = classify(FiniteGroup::make(GroupName::Z4), BasisConvention::LeftStandard, CandidateMode::Shaped);
  for (const auto& r : report.rejected) {
    const auto* sc = std::get_if<SignChangeWitness>(&r.witness);
    if (!sc) continue;
    auto c = r.side == 'L' ? r.candidate.constant : r.candidate.constant.transposed();
    // det M^R of C equals det M^L of the transposed table.
    EXPECT_GT(oracle_det(c, sc->positive), 0);
    EXPECT_LE(oracle_det(c, sc->nonpositive), 0);
  }
}

TEST(Classification, SurvivorIsPositiveAtRandomPoints) {
  std::mt19937 rng(31);
  auto c = tesseranion_constant();
  for (int i = 0; i < 40; ++i) {
    auto y = oracle::random_vector(rng, 4);
    if (tessera::is_zero(y)) continue;
    EXPECT_GT(oracle_det(c, y), 0);
  }
}

TEST(Classification, SliceRootRejection) {
  // The one Z4 candidate whose determinant is a sum of two squares with irrational zeros.
  auto report = classify(FiniteGroup::make(GroupName::Z4), BasisConvention::LeftStandard, CandidateMode::Shaped);
  std::size_t slices = 0;
  for (const auto& r : report.rejected)
    if (std::holds_alternative<SliceRootWitness>(r.witness)) {
      ++slices;
      EXPECT_EQ(r.candidate.constant, z4_shape(-1, 1, -1, -1, -1, -1));
    }
  EXPECT_EQ(slices, 1u);
}

TEST(Classification, RawZFourSurvivorsArePinned) {
  auto report = classify(FiniteGroup::make(GroupName::Z4), BasisConvention::LeftStandard, CandidateMode::Raw);
  EXPECT_EQ(report.survivors.size(), 4u);
  EXPECT_TRUE(report.undetermined.empty());
  bool has_tes = false;
  for (const auto& s : report.survivors) has_tes |= s.candidate.constant == tesseranion_constant();
  EXPECT_TRUE(has_tes);
}

TEST(Classification, MarkdownTables) {
  EXPECT_EQ(constant_markdown(complex_shape(-1)),
            "| C | 0 |  1 |\n"
            "|---|--:|---:|\n"
            "| 0 | 1 |  1 |\n"
            "| 1 | 1 | -1 |\n");
  auto labels = element_labels(FiniteGroup::make(GroupName::Z2xZ2));
  EXPECT_EQ(labels, (std::vector<std::string>{"(0,0)", "(1,0)", "(0,1)", "(1,1)"}));
}

TEST(Classification, OppositeConventionIsTransposed) {
  EXPECT_TRUE(opposite_uniqueness_check(FiniteGroup::make(GroupName::Z4), BasisConvention::LeftStandard));
  EXPECT_TRUE(opposite_uniqueness_check(FiniteGroup::make(GroupName::Z2xZ2), BasisConvention::RightStandard));
}

TEST(Classification, OddOrderGroupsForceZeroDivisors) {
  auto z3 = FiniteGroup::make(GroupName::Z3);
  auto c = StructureConstant::from_rows(z3, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, BasisConvention::LeftStandard);
  auto w = odd_order_zero_divisor(z3, c);
  EXPECT_EQ(w.prime, 3);
  EXPECT_GE(count_real_roots(w.determinant), 1);
  EXPECT_THROW(odd_order_zero_divisor(FiniteGroup::make(GroupName::Z4), tesseranion_constant()),
               std::invalid_argument);
}

TEST(Classification, FingerprintsSeparateQuaternionsAndTesseranions) {
  auto fh = non_isomorphism_fingerprint(algebras::quaternions());
  auto ft = non_isomorphism_fingerprint(algebras::tesseranions());
  EXPECT_TRUE(fh.power_associative);
  EXPECT_FALSE(ft.power_associative);
  EXPECT_NE(fh, ft);
  auto w = power_associativity_witness(algebras::tesseranions());
  ASSERT_TRUE(w.has_value());
  auto t = algebras::tesseranions();
  EXPECT_NE(t.product(*w, t.product(*w, *w)), t.product(t.product(*w, *w), *w));
  EXPECT_TRUE(random_nonsingularity_check(tesseranion_constant(), 50, 3));
}

TEST(Classification, ReportSerialization) {
  auto report = classify(FiniteGroup::make(GroupName::Z2), BasisConvention::LeftStandard, CandidateMode::Shaped);
  auto j = report_to_json(report);
  EXPECT_EQ(j["survivor_count"], 1);
  EXPECT_EQ(j["rejected_count"], 1);
  EXPECT_NE(report_to_markdown(report).find("| 1 | 1 | -1 |"), std::string::npos);
}
