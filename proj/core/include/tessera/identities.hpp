#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/expression.hpp"
#include "tessera/polynomial.hpp"

namespace tessera {

inline constexpr int kMaxIdentityDegree = 6;
inline constexpr int kMaxIdentityVariables = 3;

// One parenthesized monomial: a full binary tree whose leaves carry variable ids.
class BracketTree {
 public:
  static BracketTree leaf(int variable);
  static BracketTree node(BracketTree left, BracketTree right);
  // Accepts a product-only expression such as "x*(x*y^2)".
  static BracketTree from_expr(const Expr& e, const std::vector<std::string>& names);

  bool is_leaf() const { return node_->variable >= 0; }
  int variable() const { return node_->variable; }
  const BracketTree& left() const { return node_->children->first; }
  const BracketTree& right() const { return node_->children->second; }
  int degree() const { return node_->degree; }
  // Occurrences of each variable id.
  std::vector<int> multidegree(int nvars) const;

  // Juxtaposition with parentheses around compound factors: "x(y(xy))", "(xx)(yy)".
  std::string serialize(const std::vector<std::string>& names) const;
  Expr to_expr(const std::vector<std::string>& names) const;

  bool operator==(const BracketTree& o) const;

 private:
  struct Node {
    int variable = -1;
    int degree = 1;
    std::shared_ptr<const std::pair<BracketTree, BracketTree>> children;
  };
  explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct DegreePattern {
  std::vector<int> degrees;

  // "2,2" or "6"
  static DegreePattern parse(const std::string& text);
  int total() const;
  int nvars() const { return static_cast<int>(degrees.size()); }
  std::vector<std::string> names() const;
  std::string to_string() const;
  bool operator==(const DegreePattern& o) const { return degrees == o.degrees; }
};

// Leaf words in lexicographic order; for each word, bracketings ordered by the
// size of the left factor, recursively.
std::vector<BracketTree> enumerate_monomials(const DegreePattern& pattern);
std::size_t catalan(int n);

// Symbolic evaluation over generic elements. Subtrees are cached by serialization.
class MonomialExpander {
 public:
  MonomialExpander(const TwistedAlgebra& algebra, int nvars);
  const SymbolicElement& expand(const BracketTree& t);
  const VarNames& vars() const { return ctx_.vars; }

 private:
  const TwistedAlgebra& algebra_;
  SymbolicContext ctx_;
  std::vector<std::string> names_;
  std::map<std::string, SymbolicElement> cache_;
};

SymbolicElement expand_monomial(const TwistedAlgebra& algebra, const BracketTree& t, int nvars);

struct MonomialCombination {
  std::vector<std::pair<Rational, BracketTree>> terms;
};
// Throws std::invalid_argument when the trees do not share one multidegree.
bool verify_identity(const TwistedAlgebra& algebra, const MonomialCombination& combo);

struct IdentitySpace {
  DegreePattern pattern;
  std::vector<BracketTree> monomials;
  std::vector<RationalVector> basis;
  std::size_t rows_used = 0;

  std::size_t dimension() const { return basis.size(); }
  // True when the coefficient vector (indexed like `monomials`) lies in the span of `basis`.
  bool contains(const RationalVector& coeffs) const;
};

IdentitySpace identity_space(const TwistedAlgebra& algebra, const DegreePattern& pattern);

struct IdentityCheck {
  std::string label;
  bool holds = false;
};

// Catalog identities 1, 2, 6 and 7 for the tesseranions, their mirror images for the
// opposite algebra, and the same statements (which then hold via associativity
// and a central x.xbar) for the real, complex and quaternion algebras.
std::vector<IdentityCheck> verify_conjugate_identities(const TwistedAlgebra& algebra);

struct LawResult {
  std::string law;
  bool holds = false;
  // Arguments x, y[, z] at which the law fails.
  std::vector<AlgebraElement> counterexample;
};

struct LoopProperties {
  std::vector<LawResult> laws;
  const LawResult& get(const std::string& law) const;
  bool holds(const std::string& law) const { return get(law).holds; }
};

// commutative, associative, flexible, power_associative, left_alternative,
// right_alternative, alternative, left_bol, right_bol, moufang.
LoopProperties loop_property_suite(const TwistedAlgebra& algebra);
LawResult check_law(const TwistedAlgebra& algebra, const std::string& law, const std::vector<Identity>& identities);
// Small rational arguments (basis elements first) falsifying an identity.
std::optional<std::vector<AlgebraElement>> find_counterexample(const TwistedAlgebra& algebra, const Identity& identity);

// Catalog of the tesseranion identities.
struct NamedIdentity {
  std::string label;
  std::string text;
};
const std::vector<NamedIdentity>& tesseranity_identities();
const std::vector<NamedIdentity>& conjugate_identities();

// A coefficient family: named monomials and linear conditions expressing the
// dependent coefficients through the free ones.
struct CoefficientFamily {
  std::string label;
  DegreePattern pattern;
  std::vector<std::pair<std::string, std::string>> monomials;
  std::vector<std::string> conditions;
};
const std::vector<CoefficientFamily>& coefficient_families();
const CoefficientFamily& coefficient_family(const std::string& label);

struct FamilyCheck {
  std::string label;
  std::size_t monomials = 0;
  std::size_t free_coefficients = 0;
  std::size_t space_dimension = 0;
  std::size_t samples = 0;
  std::size_t samples_verified = 0;
  // Solution set of the conditions equals the computed identity space.
  bool spans_space = false;
  bool ok() const { return samples_verified == samples && spans_space; }
};

// Index of each family monomial within enumerate_monomials(pattern).
std::vector<std::size_t> family_monomial_indices(const CoefficientFamily& family);
// Basis of the coefficient vectors allowed by the conditions (one per free coefficient).
std::vector<RationalVector> family_solution_basis(const CoefficientFamily& family);
FamilyCheck check_coefficient_family(const TwistedAlgebra& algebra, const CoefficientFamily& family,
                                     std::size_t samples, unsigned seed);
FamilyCheck check_coefficient_family(const IdentitySpace& space, const TwistedAlgebra& algebra,
                                     const CoefficientFamily& family, std::size_t samples, unsigned seed);

}  // namespace tessera
