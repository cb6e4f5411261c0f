#include "tessera/identities.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tessera/matrix.hpp"

namespace tessera {

BracketTree BracketTree::leaf(int variable) {
  if (variable < 0) throw std::invalid_argument("negative variable id");
  auto n = std::make_shared<Node>();
  n->variable = variable;
  return BracketTree(std::move(n));
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
  auto n = std::make_shared<Node>();
  n->degree = left.degree() + right.degree();
  n->children = std::make_shared<const std::pair<BracketTree, BracketTree>>(std::move(left), std::move(right));
  return BracketTree(std::move(n));
}

BracketTree BracketTree::from_expr(const Expr& e, const std::vector<std::string>& names) {
  switch (e.kind()) {
    case Expr::Kind::Variable: {
      auto it = std::find(names.begin(), names.end(), e.name());
      if (it == names.end()) throw std::invalid_argument("unknown monomial variable: " + e.name());
      return leaf(static_cast<int>(it - names.begin()));
    }
    case Expr::Kind::Product: return node(from_expr(e.left(), names), from_expr(e.right(), names));
    default: throw std::invalid_argument("monomial must be a pure product: " + e.to_string());
  }
}

std::vector<int> BracketTree::multidegree(int nvars) const {
  std::vector<int> out(static_cast<std::size_t>(nvars), 0);
  std::vector<const BracketTree*> stack{this};
  while (!stack.empty()) {
    const BracketTree* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) {
      if (t->variable() >= nvars) throw std::invalid_argument("variable id beyond pattern");
      ++out[static_cast<std::size_t>(t->variable())];
    } else {
      stack.push_back(&t->left());
      stack.push_back(&t->right());
    }
  }
  return out;
}

std::string BracketTree::serialize(const std::vector<std::string>& names) const {
  if (is_leaf()) return names.at(static_cast<std::size_t>(variable()));
  auto part = [&](const BracketTree& t) {
    std::string s = t.serialize(names);
    return t.is_leaf() ? s : "(" + s + ")";
  };
  return part(left()) + part(right());
}

Expr BracketTree::to_expr(const std::vector<std::string>& names) const {
  if (is_leaf()) return Expr::variable(names.at(static_cast<std::size_t>(variable())));
  return Expr::product(left().to_expr(names), right().to_expr(names));
}

bool BracketTree::operator==(const BracketTree& o) const {
  if (node_ == o.node_) return true;
  if (is_leaf() || o.is_leaf()) return is_leaf() && o.is_leaf() && variable() == o.variable();
  return degree() == o.degree() && left() == o.left() && right() == o.right();
}

DegreePattern DegreePattern::parse(const std::string& text) {
  DegreePattern p;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int d = std::stoi(item, &used);
    if (d < 1) throw std::invalid_argument("pattern degrees must be positive: " + text);
    p.degrees.push_back(d);
  }
  if (p.degrees.empty()) throw std::invalid_argument("empty degree pattern");
  return p;
}

int DegreePattern::total() const {
  int t = 0;
  for (int d : degrees) t += d;
  return t;
}

std::vector<std::string> DegreePattern::names() const {
  static const std::vector<std::string> kNames{"x", "y", "z"};
  if (degrees.size() > kNames.size()) throw std::invalid_argument("at most three variables");
  return {kNames.begin(), kNames.begin() + static_cast<std::ptrdiff_t>(degrees.size())};
}

std::string DegreePattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? "," : "") + std::to_string(degrees[i]);
  return out;
}

std::size_t catalan(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::size_t>(k) + 1) / (static_cast<std::size_t>(k) + 2);
  return c;
}

namespace {

std::vector<BracketTree> bracketings(const std::vector<int>& word, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {BracketTree::leaf(word[lo])};
  std::vector<BracketTree> out;
  for (std::size_t split = lo + 1; split < hi; ++split) {
    auto lefts = bracketings(word, lo, split);
    auto rights = bracketings(word, split, hi);
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(BracketTree::node(l, r));
  }
  return out;
}

void check_pattern(const DegreePattern& pattern) {
  if (pattern.total() < 2 || pattern.total() > kMaxIdentityDegree)
    throw std::invalid_argument("identity degree must lie in [2, 6]");
  if (pattern.nvars() > kMaxIdentityVariables) throw std::invalid_argument("at most three variables");
}

}  // namespace

std::vector<BracketTree> enumerate_monomials(const DegreePattern& pattern) {
  check_pattern(pattern);
  std::vector<int> word;
  for (int v = 0; v < pattern.nvars(); ++v)
    for (int k = 0; k < pattern.degrees[static_cast<std::size_t>(v)]; ++k) word.push_back(v);
  std::vector<BracketTree> out;
  do {
    auto trees = bracketings(word, 0, word.size());
    out.insert(out.end(), trees.begin(), trees.end());
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

MonomialExpander::MonomialExpander(const TwistedAlgebra& algebra, int nvars) : algebra_(algebra) {
  if (nvars < 1 || nvars > kMaxIdentityVariables) throw std::invalid_argument("variable cap exceeded");
  if (static_cast<std::size_t>(nvars * algebra.dim()) > kMaxVars) throw std::invalid_argument("too many indeterminates");
  static const std::vector<std::string> kNames{"x", "y", "z"};
  names_.assign(kNames.begin(), kNames.begin() + nvars);
  ctx_ = make_symbolic_context(algebra.dim(), names_);
}

const SymbolicElement& MonomialExpander::expand(const BracketTree& t) {
  std::string key = t.serialize(names_);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  SymbolicElement value;
  if (t.is_leaf()) {
    value = ctx_.elements.at(names_.at(static_cast<std::size_t>(t.variable())));
  } else {
    SymbolicElement l = expand(t.left());
    const SymbolicElement& r = expand(t.right());
    value = twisted_product(algebra_.constant(), l, r);
  }
  return cache_.emplace(std::move(key), std::move(value)).first->second;
}

SymbolicElement expand_monomial(const TwistedAlgebra& algebra, const BracketTree& t, int nvars) {
  MonomialExpander ex(algebra, nvars);
  return ex.expand(t);
}

bool verify_identity(const TwistedAlgebra& algebra, const MonomialCombination& combo) {
  if (combo.terms.empty()) return true;
  int nvars = 0;
  std::vector<int> first;
  for (const auto& [c, t] : combo.terms) {
    auto md = t.multidegree(kMaxIdentityVariables);
    if (first.empty()) first = md;
    else if (md != first) throw std::invalid_argument("monomials do not share one degree pattern");
  }
  for (int v = 0; v < kMaxIdentityVariables; ++v)
    if (first[static_cast<std::size_t>(v)] > 0) nvars = v + 1;
  MonomialExpander ex(algebra, nvars);
  SymbolicElement sum(static_cast<std::size_t>(algebra.dim()), MultiPoly(ex.vars()));
  for (const auto& [c, t] : combo.terms) {
    const auto& v = ex.expand(t);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k] * c;
  }
  return std::all_of(sum.begin(), sum.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool IdentitySpace::contains(const RationalVector& coeffs) const {
  if (coeffs.size() != monomials.size()) throw std::invalid_argument("coefficient vector length mismatch");
  return in_span(basis, coeffs, monomials.size());
}

IdentitySpace identity_space(const TwistedAlgebra& algebra, const DegreePattern& pattern) {
  IdentitySpace space;
  space.pattern = pattern;
  space.monomials = enumerate_monomials(pattern);
  MonomialExpander ex(algebra, pattern.nvars());
  std::map<std::pair<std::size_t, Exponents>, std::size_t> slots;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  for (const auto& t : space.monomials) {
    const auto& v = ex.expand(t);
    std::vector<std::pair<std::size_t, Rational>> col;
    for (std::size_t k = 0; k < v.size(); ++k) {
      for (const auto& [exps, coef] : v[k].terms()) {
        auto [it, inserted] = slots.emplace(std::make_pair(k, exps), slots.size());
        col.emplace_back(it->second, coef);
      }
    }
    columns.push_back(std::move(col));
  }
  space.rows_used = slots.size();
  RationalMatrix m(slots.size(), space.monomials.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, coef] : columns[c]) m(r, c) = coef;
  space.basis = nullspace(std::move(m));
  return space;
}

namespace {

bool is_tesseranion_like(const TwistedAlgebra& a, bool transposed) {
  auto t = tesseranion_constant();
  if (a.group().name() != GroupName::Z4) return false;
  return a.constant().values() == (transposed ? t.values().transposed() : t.values());
}

}  // namespace

std::vector<IdentityCheck> verify_conjugate_identities(const TwistedAlgebra& algebra) {
  if (!algebra.supports_conjugation()) throw std::invalid_argument("conjugation not defined for this grading");
  bool mirror = is_tesseranion_like(algebra, true) && !is_tesseranion_like(algebra, false);
  std::vector<IdentityCheck> out;
  for (const auto& named : conjugate_identities()) {
    Identity id = Identity::parse(named.label, named.text);
    if (mirror) id = id.mirror();
    out.push_back({id.label, verify_expression_identity(algebra, id)});
  }
  return out;
}

const LawResult& LoopProperties::get(const std::string& law) const {
  for (const auto& l : laws)
    if (l.law == law) return l;
  throw std::out_of_range("unknown law: " + law);
}

std::optional<std::vector<AlgebraElement>> find_counterexample(const TwistedAlgebra& algebra, const Identity& identity) {
  const auto names = identity.variables();
  const std::size_t k = names.size();
  const int n = algebra.dim();
  auto fails = [&](const std::vector<AlgebraElement>& args) {
    std::map<std::string, AlgebraElement> b;
    for (std::size_t i = 0; i < k; ++i) b[names[i]] = args[i];
    AlgebraElement first = evaluate_numeric(identity.sides[0], algebra, b);
    if (identity.sides.size() == 1) return !first.is_zero();
    for (std::size_t s = 1; s < identity.sides.size(); ++s)
      if (!(first == evaluate_numeric(identity.sides[s], algebra, b))) return true;
    return false;
  };
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<AlgebraElement> args;
    for (int i : idx) args.push_back(algebra.basis(i));
    if (fails(args)) return args;
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == k) break;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<AlgebraElement> args;
    for (std::size_t i = 0; i < k; ++i) {
      RationalVector v(static_cast<std::size_t>(n));
      for (auto& c : v) c = dist(rng);
      args.push_back(algebra.element(v));
    }
    if (fails(args)) return args;
  }
  return std::nullopt;
}

LawResult check_law(const TwistedAlgebra& algebra, const std::string& law, const std::vector<Identity>& identities) {
  LawResult r;
  r.law = law;
  r.holds = true;
  for (const auto& id : identities) {
    if (verify_expression_identity(algebra, id)) continue;
    r.holds = false;
    if (auto ce = find_counterexample(algebra, id)) r.counterexample = *ce;
    break;
  }
  return r;
}

LoopProperties loop_property_suite(const TwistedAlgebra& algebra) {
  auto id = [](const char* label, const char* text) { return Identity::parse(label, text); };
  const Identity left_alt = id("left alternative", "x*(x*y) = x^2*y");
  const Identity right_alt = id("right alternative", "(y*x)*x = y*x^2");
  const std::vector<std::pair<std::string, std::vector<Identity>>> laws{
      {"commutative", {id("commutative", "x*y = y*x")}},
      {"associative", {id("associative", "x*(y*z) = (x*y)*z")}},
      {"flexible", {id("flexible", "x*(y*x) = (x*y)*x")}},
      {"power_associative", {id("third power", "x*x^2 = x^2*x"), id("fourth power", "x^2*x^2 = (x^2*x)*x")}},
      {"left_alternative", {left_alt}},
      {"right_alternative", {right_alt}},
      {"alternative", {left_alt, right_alt}},
      {"left_bol", {id("left Bol", "x*(y*(x*z)) = (x*(y*x))*z")}},
      {"right_bol", {id("right Bol", "((z*x)*y)*x = z*((x*y)*x)")}},
      {"moufang", {id("Moufang", "(x*y)*(z*x) = (x*(y*z))*x")}},
  };
  LoopProperties out;
  for (const auto& [name, ids] : laws) out.laws.push_back(check_law(algebra, name, ids));
  return out;
}

const CoefficientFamily& coefficient_family(const std::string& label) {
  for (const auto& f : coefficient_families())
    if (f.label == label) return f;
  throw std::out_of_range("unknown coefficient family: " + label);
}

std::vector<std::size_t> family_monomial_indices(const CoefficientFamily& family) {
  const auto all = enumerate_monomials(family.pattern);
  const auto names = family.pattern.names();
  std::vector<std::size_t> out;
  for (const auto& [coef, text] : family.monomials) {
    auto tree = BracketTree::from_expr(Expr::parse(text), names);
    auto it = std::find(all.begin(), all.end(), tree);
    if (it == all.end()) throw std::invalid_argument("monomial outside the pattern: " + text);
    out.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  std::set<std::size_t> distinct(out.begin(), out.end());
  if (distinct.size() != out.size()) throw std::invalid_argument(family.label + " lists a monomial twice");
  return out;
}

std::vector<RationalVector> family_solution_basis(const CoefficientFamily& family) {
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < family.monomials.size(); ++i) position[family.monomials[i].first] = i;
  std::map<std::string, LinearCondition> dependent;
  for (const auto& text : family.conditions) {
    auto c = parse_linear_condition(text);
    if (!position.count(c.dependent)) throw std::invalid_argument("unknown coefficient " + c.dependent);
    for (const auto& [name, coef] : c.form)
      if (!position.count(name)) throw std::invalid_argument("unknown coefficient " + name);
    dependent.emplace(c.dependent, std::move(c));
  }
  const auto indices = family_monomial_indices(family);
  const std::size_t width = enumerate_monomials(family.pattern).size();
  std::vector<RationalVector> basis;
  for (const auto& [name, pos] : family.monomials) {
    (void)pos;
    if (dependent.count(name)) continue;
    RationalVector v(width);
    v[indices[position[name]]] = 1;
    for (const auto& [dep, cond] : dependent) {
      auto it = cond.form.find(name);
      if (it != cond.form.end()) v[indices[position[dep]]] = it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FamilyCheck check_coefficient_family(const TwistedAlgebra& algebra, const CoefficientFamily& family,
                                     std::size_t samples, unsigned seed) {
  return check_coefficient_family(identity_space(algebra, family.pattern), algebra, family, samples, seed);
}

FamilyCheck check_coefficient_family(const IdentitySpace& space, const TwistedAlgebra& algebra,
                                     const CoefficientFamily& family, std::size_t samples, unsigned seed) {
  FamilyCheck out;
  out.label = family.label;
  out.monomials = family.monomials.size();
  out.space_dimension = space.dimension();
  const auto basis = family_solution_basis(family);
  out.free_coefficients = basis.size();
  const std::size_t width = space.monomials.size();
  bool all_inside = std::all_of(basis.begin(), basis.end(), [&](const RationalVector& v) { return space.contains(v); });
  out.spans_space = all_inside && row_space_basis(basis, width).size() == space.dimension();

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  out.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector coeffs(width);
    for (const auto& b : basis) {
      Rational r = dist(rng);
      for (std::size_t i = 0; i < width; ++i) coeffs[i] += r * b[i];
    }
    MonomialCombination combo;
    for (std::size_t i = 0; i < width; ++i)
      if (coeffs[i] != 0) combo.terms.emplace_back(coeffs[i], space.monomials[i]);
    if (verify_identity(algebra, combo)) ++out.samples_verified;
  }
  return out;
}

}  // namespace tessera
