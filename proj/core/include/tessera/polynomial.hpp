#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tessera/rational.hpp"

namespace tessera {

inline constexpr std::size_t kMaxVars = 16;
using Exponents = std::array<std::uint8_t, kMaxVars>;
using VarNames = std::shared_ptr<const std::vector<std::string>>;

VarNames make_vars(std::vector<std::string> names);
// prefix0, prefix1, ..., prefix{n-1}
VarNames make_vars(const std::string& prefix, std::size_t n);

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  // The zero polynomial with no variable set; it adopts the variables of the
  // first polynomial it is combined with.
  MultiPoly() = default;
  explicit MultiPoly(VarNames vars);
  MultiPoly(VarNames vars, const Rational& constant);

  static MultiPoly variable(VarNames vars, std::size_t index);
  static MultiPoly variable(VarNames vars, const std::string& name);
  static MultiPoly monomial(VarNames vars, const Exponents& exps, const Rational& coef);

  const VarNames& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  std::size_t var_index(const std::string& name) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponents& exps) const;

  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  // Variables that occur with a nonzero exponent.
  std::vector<std::size_t> support() const;

  void add_term(const Exponents& exps, const Rational& coef);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rational evaluate(const RationalVector& point) const;
  double evaluate_double(const std::vector<double>& point) const;
  // Substitutes the bound variables; unknown names throw.
  MultiPoly specialize(const std::map<std::string, Rational>& bindings) const;
  MultiPoly specialize(const std::vector<std::optional<Rational>>& bindings) const;
  // Substitutes a polynomial (over `target` variables) for each variable.
  MultiPoly compose(const std::vector<MultiPoly>& images, VarNames target) const;
  // Re-expresses the polynomial over a larger variable set containing all names.
  MultiPoly rebase(VarNames target) const;

  std::string to_string() const;

 private:
  void adopt(const MultiPoly& o);

  VarNames vars_;
  TermMap terms_;
};

bool same_vars(const VarNames& a, const VarNames& b);

// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

nlohmann::ordered_json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::ordered_json& j);

}  // namespace tessera
