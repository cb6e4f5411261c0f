#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tessera {

enum class GroupName { Trivial, Z2, Z3, Z4, Z2xZ2, Z6, Z2xZ2xZ2, Z2xZ4, Z8, D4, Q8 };

enum class BasisConvention { LeftStandard, RightStandard };

std::string_view group_name_string(GroupName name);
GroupName parse_group_name(std::string_view text);
std::string_view convention_string(BasisConvention convention);
BasisConvention parse_convention(std::string_view text);

struct GroupElement {
  int index = 0;
  auto operator<=>(const GroupElement&) const = default;
};

// Exponent tuple (s_1, ..., s_m) of a standard-basis word together with the
// group element it evaluates to.
struct BasisWord {
  std::vector<int> exponents;
  BasisConvention convention = BasisConvention::LeftStandard;
  GroupElement element;

  // word < other when the last nonzero entry of (exponents - other.exponents) is negative.
  bool precedes(const BasisWord& other) const;
  std::string to_string() const;
};

class FiniteGroup {
 public:
  static FiniteGroup make(GroupName name);
  // Cyclic group of arbitrary order, used for the odd-order zero-divisor argument.
  static FiniteGroup cyclic(int order);

  int order() const { return order_; }
  GroupName name() const { return name_; }
  std::string label() const;
  const std::vector<GroupElement>& generators() const { return generators_; }
  // Exponent range per generator in the unique-word expressions.
  const std::vector<int>& exponent_bounds() const { return exponent_bounds_; }

  GroupElement multiply(GroupElement g, GroupElement h) const;
  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g * order_ + h)]; }
  int inverse(int g) const { return inverses_[static_cast<std::size_t>(g)]; }
  GroupElement inverse(GroupElement g) const;
  GroupElement identity() const { return GroupElement{0}; }
  int element_order(int g) const;
  bool is_abelian() const;
  bool is_associative() const;
  bool rows_and_columns_are_permutations() const;
  // A subgroup of the given prime order generated by some element, if any.
  std::optional<std::vector<int>> cyclic_subgroup_of_order(int p) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  FiniteGroup(GroupName name, int order, std::vector<int> table, std::vector<GroupElement> generators,
              std::vector<int> bounds);

  GroupName name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<GroupElement> generators_;
  std::vector<int> exponent_bounds_;
};

GroupElement multiply(GroupElement g, GroupElement h, const FiniteGroup& group);

// Words in basis order; the first is the empty word (identity).
std::vector<BasisWord> standard_basis_words(const FiniteGroup& group, BasisConvention convention);

}  // namespace tessera
