#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tessera/groups.hpp"
#include "tessera/matrix.hpp"
#include "tessera/rational.hpp"

namespace tessera {

class ScalarRing {
 public:
  enum class Kind { Rational, ModP };

  static ScalarRing rational() { return ScalarRing(); }
  static ScalarRing mod_p(long p);

  Kind kind() const { return kind_; }
  long modulus() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::string label() const;

  // Canonical representative: identity over Q, residue in [0, p) over Z_p.
  Rational reduce(const Rational& q) const;
  Rational inverse(const Rational& q) const;
  bool contains(const Rational& q) const;

  bool operator==(const ScalarRing& other) const { return kind_ == other.kind_ && p_ == other.p_; }

 private:
  Kind kind_ = Kind::Rational;
  long p_ = 0;
};

bool is_prime(long n);

struct AlgebraElement {
  RationalVector coeffs;

  AlgebraElement() = default;
  explicit AlgebraElement(RationalVector c) : coeffs(std::move(c)) {}
  AlgebraElement(std::initializer_list<Rational> c) : coeffs(c) {}

  std::size_t size() const { return coeffs.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  Rational& operator[](std::size_t i) { return coeffs[i]; }
  bool is_zero() const { return tessera::is_zero(coeffs); }
  std::string to_string() const { return tessera::to_string(coeffs); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }
};

class StructureConstant {
 public:
  StructureConstant(FiniteGroup group, RationalMatrix values, BasisConvention convention);

  // Builds from integer rows (row = left factor).
  static StructureConstant from_rows(FiniteGroup group, const std::vector<std::vector<Rational>>& rows,
                                     BasisConvention convention);

  const FiniteGroup& group() const { return group_; }
  const RationalMatrix& values() const { return values_; }
  BasisConvention convention() const { return convention_; }
  int order() const { return group_.order(); }
  const Rational& operator()(int a, int b) const {
    return values_(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }

  bool is_unital() const;
  bool is_sign_valued() const;
  StructureConstant transposed() const;
  std::string to_string() const;

  bool operator==(const StructureConstant& o) const {
    return group_ == o.group_ && values_ == o.values_ && convention_ == o.convention_;
  }

 private:
  FiniteGroup group_;
  RationalMatrix values_;
  BasisConvention convention_;
};

class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(StructureConstant constant, ScalarRing ring = ScalarRing::rational(), std::string name = "");

  const StructureConstant& constant() const { return constant_; }
  const FiniteGroup& group() const { return constant_.group(); }
  const ScalarRing& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  int dim() const { return constant_.order(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(int g) const;
  AlgebraElement element(const RationalVector& coeffs) const;
  AlgebraElement reduce(AlgebraElement x) const;

  AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement scale(const Rational& s, const AlgebraElement& x) const;

  // (M^L)_{c,a} = C(a, a^{-1}c) y_{a^{-1}c}, so that M^L(y) x = x . y.
  RationalMatrix left_matrix(const AlgebraElement& y) const;
  // (M^R)_{c,b} = x_{cb^{-1}} C(cb^{-1}, b), so that M^R(x) y = x . y.
  RationalMatrix right_matrix(const AlgebraElement& x) const;

  bool supports_conjugation() const;
  AlgebraElement conjugate(const AlgebraElement& x) const;
  TwistedAlgebra opposite() const;

 private:
  void check(const AlgebraElement& x) const;

  StructureConstant constant_;
  ScalarRing ring_;
  std::string name_;
};

// Graded product over any scalar type supporting +, * and multiplication by Rational.
template <class S>
std::vector<S> twisted_product(const StructureConstant& c, const std::vector<S>& x, const std::vector<S>& y) {
  const int n = c.order();
  const auto& g = c.group();
  std::vector<S> out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Rational& coef = c(a, b);
      if (coef == 0) continue;
      auto& slot = out[static_cast<std::size_t>(g.mul(a, b))];
      slot += (x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)]) * coef;
    }
  }
  return out;
}

// Unital shape over Z2: C(1,1) = alpha.
StructureConstant complex_shape(const Rational& alpha);
// Unital shape over Z4 in a left-standard basis, six free signs.
StructureConstant z4_shape(const Rational& alpha, const Rational& beta, const Rational& delta, const Rational& epsilon,
                           const Rational& phi, const Rational& omega);
// Unital shape over Z2xZ2 in a right-standard basis, five free signs.
StructureConstant klein_shape(const Rational& alpha, const Rational& beta, const Rational& delta,
                              const Rational& epsilon, const Rational& phi);

namespace algebras {
TwistedAlgebra reals();
TwistedAlgebra complex();
TwistedAlgebra quaternions();
TwistedAlgebra tesseranions(ScalarRing ring = ScalarRing::rational());
TwistedAlgebra by_name(const std::string& name);
}  // namespace algebras

StructureConstant quaternion_constant();
StructureConstant tesseranion_constant();

}  // namespace tessera
