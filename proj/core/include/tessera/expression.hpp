#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/polynomial.hpp"

namespace tessera {

// Algebra expression over named elements: sums with rational coefficients,
// binary products, squares and conjugation. A bare number denotes that
// multiple of the unit element.
class Expr {
 public:
  enum class Kind { Variable, Number, Sum, Product, Conjugate };

  static Expr variable(std::string name);
  static Expr number(Rational value);
  static Expr product(Expr left, Expr right);
  static Expr conjugate(Expr inner);
  static Expr sum(std::vector<std::pair<Rational, Expr>> terms);

  // Grammar: sum of [coef *] factor [* factor]; factor is a name, number,
  // (expr), [expr], bar(expr), followed by optional ^2. Products of more than
  // two factors must be parenthesized.
  static Expr parse(std::string_view text);

  Kind kind() const;
  const std::string& name() const;
  const Rational& value() const;
  const Expr& left() const;
  const Expr& right() const;
  const Expr& inner() const;
  const std::vector<std::pair<Rational, Expr>>& terms() const;

  std::vector<std::string> variables() const;
  // Reverses every product: the same expression read in the opposite algebra.
  Expr mirror() const;
  // Replaces variables by expressions.
  Expr substitute(const std::map<std::string, Expr>& images) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Chain of expressions asserted pairwise equal: "lhs = rhs = ...". A single
// side is asserted to vanish.
struct Identity {
  std::string label;
  std::vector<Expr> sides;

  static Identity parse(std::string label, std::string_view text);
  Identity mirror() const;
  std::vector<std::string> variables() const;
};

using SymbolicElement = std::vector<MultiPoly>;

// Generic elements: variable v gets components v0..v{n-1} as indeterminates.
struct SymbolicContext {
  VarNames vars;
  std::map<std::string, SymbolicElement> elements;
};

SymbolicContext make_symbolic_context(int dim, const std::vector<std::string>& variable_names);
SymbolicElement symbolic_constant(const VarNames& vars, const RationalVector& value);

SymbolicElement evaluate_symbolic(const Expr& e, const StructureConstant& c,
                                  const std::map<std::string, SymbolicElement>& bindings, const VarNames& vars);
AlgebraElement evaluate_numeric(const Expr& e, const TwistedAlgebra& algebra,
                                const std::map<std::string, AlgebraElement>& bindings);

// Symbolic check over generic components; names in `constants` are fixed elements.
bool verify_expression_identity(const TwistedAlgebra& algebra, const Identity& identity,
                                const std::map<std::string, AlgebraElement>& constants = {});
// Residual side[0] - side[k] for every k, symbolically.
std::vector<SymbolicElement> identity_residuals(const TwistedAlgebra& algebra, const Identity& identity,
                                               const std::map<std::string, AlgebraElement>& constants = {});

// Parses "a1 = -f6 - c1 + 2*f3" (or "2 f3") into a dependent name and a linear form.
struct LinearCondition {
  std::string dependent;
  std::map<std::string, Rational> form;
};
LinearCondition parse_linear_condition(std::string_view text);

}  // namespace tessera
