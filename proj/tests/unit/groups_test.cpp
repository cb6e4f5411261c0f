#include <gtest/gtest.h>

#include <set>

#include "tessera/groups.hpp"

using namespace tessera;

namespace {

const GroupName kAll[] = {GroupName::Trivial, GroupName::Z2,       GroupName::Z3,    GroupName::Z4,
                          GroupName::Z2xZ2,   GroupName::Z6,       GroupName::Z2xZ2xZ2, GroupName::Z2xZ4,
                          GroupName::Z8,      GroupName::D4,       GroupName::Q8};

}  // namespace

class GroupAxioms : public ::testing::TestWithParam<GroupName> {};

TEST_P(GroupAxioms, TableIsAGroup) {
  auto g = FiniteGroup::make(GetParam());
  int n = g.order();
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(0, a), a);
    EXPECT_EQ(g.mul(a, 0), a);
    EXPECT_EQ(g.mul(a, g.inverse(a)), 0);
    EXPECT_EQ(g.mul(g.inverse(a), a), 0);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
  EXPECT_TRUE(g.is_associative());
  EXPECT_TRUE(g.rows_and_columns_are_permutations());
}

TEST_P(GroupAxioms, StandardWordsEnumerateEachElementOnce) {
  auto g = FiniteGroup::make(GetParam());
  for (auto conv : {BasisConvention::LeftStandard, BasisConvention::RightStandard}) {
    auto words = standard_basis_words(g, conv);
    ASSERT_EQ(words.size(), static_cast<std::size_t>(g.order()));
    EXPECT_EQ(words.front().element, g.identity());
    std::set<int> seen;
    for (const auto& w : words) seen.insert(w.element.index);
    EXPECT_EQ(seen.size(), words.size());
    for (std::size_t i = 1; i < words.size(); ++i) EXPECT_TRUE(words[i - 1].precedes(words[i]));
  }
}

TEST_P(GroupAxioms, NameRoundTrips) {
  auto g = FiniteGroup::make(GetParam());
  EXPECT_EQ(parse_group_name(group_name_string(GetParam())), GetParam());
  EXPECT_EQ(g.name(), GetParam());
}

INSTANTIATE_TEST_SUITE_P(All, GroupAxioms, ::testing::ValuesIn(kAll));

TEST(Groups, OrdersAndCommutativity) {
  EXPECT_EQ(FiniteGroup::make(GroupName::Z4).order(), 4);
  EXPECT_EQ(FiniteGroup::make(GroupName::Z2xZ2xZ2).order(), 8);
  EXPECT_TRUE(FiniteGroup::make(GroupName::Z2xZ4).is_abelian());
  EXPECT_FALSE(FiniteGroup::make(GroupName::D4).is_abelian());
  EXPECT_FALSE(FiniteGroup::make(GroupName::Q8).is_abelian());
}

TEST(Groups, ElementOrders) {
  auto z4 = FiniteGroup::make(GroupName::Z4);
  EXPECT_EQ(z4.element_order(0), 1);
  EXPECT_EQ(z4.element_order(1), 4);
  EXPECT_EQ(z4.element_order(2), 2);
  auto klein = FiniteGroup::make(GroupName::Z2xZ2);
  for (int a = 1; a < 4; ++a) EXPECT_EQ(klein.element_order(a), 2);
  int fours = 0;
  auto q8 = FiniteGroup::make(GroupName::Q8);
  for (int a = 0; a < 8; ++a) fours += q8.element_order(a) == 4;
  EXPECT_EQ(fours, 6);
}

TEST(Groups, KleinIndexing) {
  // (n, m) sits at index n + 2m
  auto k = FiniteGroup::make(GroupName::Z2xZ2);
  EXPECT_EQ(k.mul(1, 2), 3);
  EXPECT_EQ(k.mul(3, 1), 2);
  EXPECT_EQ(k.mul(3, 3), 0);
}

TEST(Groups, CyclicOfAnyOrder) {
  auto z5 = FiniteGroup::cyclic(5);
  EXPECT_EQ(z5.order(), 5);
  EXPECT_EQ(z5.mul(3, 4), 2);
  EXPECT_EQ(z5.inverse(2), 3);
  auto sub = FiniteGroup::make(GroupName::Z6).cyclic_subgroup_of_order(3);
  ASSERT_TRUE(sub.has_value());
  EXPECT_EQ(sub->size(), 3u);
  EXPECT_FALSE(FiniteGroup::make(GroupName::Z4).cyclic_subgroup_of_order(3).has_value());
}

TEST(Groups, UnknownNameThrows) { EXPECT_THROW(parse_group_name("Z5x"), std::invalid_argument); }
