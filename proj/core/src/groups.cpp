#include "tessera/groups.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>

namespace tessera {

namespace {

using Realization = std::vector<int>;
using RealMul = std::function<Realization(const Realization&, const Realization&)>;

// Builds a Cayley table from a faithful realization in which element with
// index s_1 + O_1*s_2 + ... equals g_m^{s_m} ... g_1^{s_1}.
std::vector<int> table_from_realization(const std::vector<Realization>& gens, const std::vector<int>& bounds,
                                        const Realization& unit, const RealMul& mul) {
  int order = 1;
  for (int b : bounds) order *= b;
  std::vector<Realization> elements(static_cast<std::size_t>(order));
  for (int idx = 0; idx < order; ++idx) {
    int rest = idx;
    Realization value = unit;
    std::vector<int> exps;
    for (int b : bounds) {
      exps.push_back(rest % b);
      rest /= b;
    }
    for (std::size_t k = gens.size(); k-- > 0;) {
      for (int e = 0; e < exps[k]; ++e) value = mul(value, gens[k]);
    }
    elements[static_cast<std::size_t>(idx)] = value;
  }
  std::map<Realization, int> lookup;
  for (int i = 0; i < order; ++i) {
    if (!lookup.emplace(elements[static_cast<std::size_t>(i)], i).second) {
      throw std::logic_error("group realization is not faithful");
    }
  }
  std::vector<int> table(static_cast<std::size_t>(order * order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      table[static_cast<std::size_t>(a * order + b)] =
          lookup.at(mul(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]));
    }
  }
  return table;
}

Realization matmul2(const Realization& a, const Realization& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Realization hamilton(const Realization& a, const Realization& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Realization add_mod(const Realization& a, const Realization& b, const std::vector<int>& mods) {
  Realization r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % mods[i];
  return r;
}

struct Recipe {
  std::vector<Realization> gens;
  std::vector<int> bounds;
  Realization unit;
  RealMul mul;
};

Recipe abelian_recipe(const std::vector<int>& mods) {
  Recipe r;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    Realization g(mods.size(), 0);
    g[i] = 1;
    r.gens.push_back(g);
  }
  r.bounds = mods;
  r.unit = Realization(mods.size(), 0);
  r.mul = [mods](const Realization& a, const Realization& b) { return add_mod(a, b, mods); };
  return r;
}

}  // namespace

std::string_view group_name_string(GroupName name) {
  switch (name) {
    case GroupName::Trivial: return "Trivial";
    case GroupName::Z2: return "Z2";
    case GroupName::Z3: return "Z3";
    case GroupName::Z4: return "Z4";
    case GroupName::Z2xZ2: return "Z2xZ2";
    case GroupName::Z6: return "Z6";
    case GroupName::Z2xZ2xZ2: return "Z2xZ2xZ2";
    case GroupName::Z2xZ4: return "Z2xZ4";
    case GroupName::Z8: return "Z8";
    case GroupName::D4: return "D4";
    case GroupName::Q8: return "Q8";
  }
  return "?";
}

GroupName parse_group_name(std::string_view text) {
  static const std::array names{GroupName::Trivial, GroupName::Z2, GroupName::Z3, GroupName::Z4,
                                GroupName::Z2xZ2, GroupName::Z6, GroupName::Z2xZ2xZ2, GroupName::Z2xZ4,
                                GroupName::Z8, GroupName::D4, GroupName::Q8};
  for (GroupName n : names) {
    if (group_name_string(n) == text) return n;
  }
  if (text == "Z1" || text == "trivial") return GroupName::Trivial;
  if (text == "Klein" || text == "V4") return GroupName::Z2xZ2;
  throw std::invalid_argument("unsupported group name: " + std::string(text));
}

std::string_view convention_string(BasisConvention convention) {
  return convention == BasisConvention::LeftStandard ? "left-standard" : "right-standard";
}

BasisConvention parse_convention(std::string_view text) {
  if (text == "left" || text == "left-standard" || text == "LeftStandard") return BasisConvention::LeftStandard;
  if (text == "right" || text == "right-standard" || text == "RightStandard") return BasisConvention::RightStandard;
  throw std::invalid_argument("unknown basis convention: " + std::string(text));
}

bool BasisWord::precedes(const BasisWord& other) const {
  for (std::size_t k = exponents.size(); k-- > 0;) {
    int diff = exponents[k] - other.exponents[k];
    if (diff != 0) return diff < 0;
  }
  return false;
}

std::string BasisWord::to_string() const {
  std::string out;
  auto factor = [&](std::size_t k) {
    if (exponents[k] == 0) return;
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(k + 1);
    if (exponents[k] > 1) out += "^" + std::to_string(exponents[k]);
  };
  if (convention == BasisConvention::LeftStandard) {
    for (std::size_t k = exponents.size(); k-- > 0;) factor(k);
  } else {
    for (std::size_t k = 0; k < exponents.size(); ++k) factor(k);
  }
  return out.empty() ? "e" : out;
}

FiniteGroup::FiniteGroup(GroupName name, int order, std::vector<int> table, std::vector<GroupElement> generators,
                         std::vector<int> bounds)
    : name_(name),
      order_(order),
      table_(std::move(table)),
      generators_(std::move(generators)),
      exponent_bounds_(std::move(bounds)) {
  inverses_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) inverses_[static_cast<std::size_t>(a)] = b;
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(order * order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) table[static_cast<std::size_t>(a * order + b)] = (a + b) % order;
  }
  GroupName name = GroupName::Trivial;
  switch (order) {
    case 2: name = GroupName::Z2; break;
    case 3: name = GroupName::Z3; break;
    case 4: name = GroupName::Z4; break;
    case 6: name = GroupName::Z6; break;
    case 8: name = GroupName::Z8; break;
    default: break;
  }
  if (order == 1) return FiniteGroup(GroupName::Trivial, 1, std::move(table), {}, {});
  return FiniteGroup(name, order, std::move(table), {GroupElement{1}}, {order});
}

FiniteGroup FiniteGroup::make(GroupName name) {
  switch (name) {
    case GroupName::Trivial: return cyclic(1);
    case GroupName::Z2: return cyclic(2);
    case GroupName::Z3: return cyclic(3);
    case GroupName::Z4: return cyclic(4);
    case GroupName::Z6: return cyclic(6);
    case GroupName::Z8: return cyclic(8);
    default: break;
  }
  Recipe recipe;
  std::vector<GroupElement> generators;
  switch (name) {
    case GroupName::Z2xZ2:
      recipe = abelian_recipe({2, 2});
      generators = {GroupElement{1}, GroupElement{2}};
      break;
    case GroupName::Z2xZ2xZ2:
      recipe = abelian_recipe({2, 2, 2});
      generators = {GroupElement{1}, GroupElement{2}, GroupElement{4}};
      break;
    case GroupName::Z2xZ4:
      recipe = abelian_recipe({4, 2});
      generators = {GroupElement{1}, GroupElement{4}};
      break;
    case GroupName::D4:
      recipe.gens = {{0, -1, 1, 0}, {1, 0, 0, -1}};
      recipe.bounds = {4, 2};
      recipe.unit = {1, 0, 0, 1};
      recipe.mul = matmul2;
      generators = {GroupElement{1}, GroupElement{4}};
      break;
    case GroupName::Q8:
      recipe.gens = {{0, 1, 0, 0}, {0, 0, 1, 0}};
      recipe.bounds = {4, 2};
      recipe.unit = {1, 0, 0, 0};
      recipe.mul = hamilton;
      generators = {GroupElement{1}, GroupElement{4}};
      break;
    default:
      throw std::invalid_argument("unsupported group");
  }
  int order = 1;
  for (int b : recipe.bounds) order *= b;
  auto table = table_from_realization(recipe.gens, recipe.bounds, recipe.unit, recipe.mul);
  return FiniteGroup(name, order, std::move(table), std::move(generators), recipe.bounds);
}

std::string FiniteGroup::label() const { return std::string(group_name_string(name_)); }

GroupElement FiniteGroup::multiply(GroupElement g, GroupElement h) const {
  if (g.index < 0 || g.index >= order_ || h.index < 0 || h.index >= order_) {
    throw std::out_of_range("group element index out of range");
  }
  return GroupElement{mul(g.index, h.index)};
}

GroupElement FiniteGroup::inverse(GroupElement g) const {
  if (g.index < 0 || g.index >= order_) throw std::out_of_range("group element index out of range");
  return GroupElement{inverse(g.index)};
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_associative() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      for (int c = 0; c < order_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  return true;
}

bool FiniteGroup::rows_and_columns_are_permutations() const {
  for (int a = 0; a < order_; ++a) {
    std::vector<bool> row(static_cast<std::size_t>(order_)), col(static_cast<std::size_t>(order_));
    for (int b = 0; b < order_; ++b) {
      if (row[static_cast<std::size_t>(mul(a, b))] || col[static_cast<std::size_t>(mul(b, a))]) return false;
      row[static_cast<std::size_t>(mul(a, b))] = true;
      col[static_cast<std::size_t>(mul(b, a))] = true;
    }
    if (mul(0, a) != a || mul(a, 0) != a) return false;
  }
  return true;
}

std::optional<std::vector<int>> FiniteGroup::cyclic_subgroup_of_order(int p) const {
  for (int g = 1; g < order_; ++g) {
    if (element_order(g) == p) {
      std::vector<int> elems{0};
      for (int x = g; x != 0; x = mul(x, g)) elems.push_back(x);
      return elems;
    }
  }
  for (int g = 1; g < order_; ++g) {
    int o = element_order(g);
    if (o % p == 0) {
      int h = 0;
      for (int k = 0; k < o / p; ++k) h = mul(h, g);
      std::vector<int> elems{0};
      for (int x = h; x != 0; x = mul(x, h)) elems.push_back(x);
      return elems;
    }
  }
  return std::nullopt;
}

GroupElement multiply(GroupElement g, GroupElement h, const FiniteGroup& group) { return group.multiply(g, h); }

std::vector<BasisWord> standard_basis_words(const FiniteGroup& group, BasisConvention convention) {
  const auto& gens = group.generators();
  const auto& bounds = group.exponent_bounds();
  for (std::size_t k = 1; k < gens.size(); ++k) {
    if (group.element_order(gens[k - 1].index) < group.element_order(gens[k].index)) {
      throw std::logic_error("generator orders must be non-increasing");
    }
  }
  std::vector<BasisWord> words;
  for (int idx = 0; idx < group.order(); ++idx) {
    BasisWord w;
    w.convention = convention;
    int rest = idx;
    for (int b : bounds) {
      w.exponents.push_back(rest % b);
      rest /= b;
    }
    int g = 0;
    auto append = [&](std::size_t k) {
      for (int e = 0; e < w.exponents[k]; ++e) g = group.mul(g, gens[k].index);
    };
    if (convention == BasisConvention::LeftStandard) {
      for (std::size_t k = gens.size(); k-- > 0;) append(k);
    } else {
      for (std::size_t k = 0; k < gens.size(); ++k) append(k);
    }
    w.element = GroupElement{g};
    words.push_back(std::move(w));
  }
  return words;
}

}  // namespace tessera
