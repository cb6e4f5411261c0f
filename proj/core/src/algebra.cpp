#include "tessera/algebra.hpp"

#include <stdexcept>

namespace tessera {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ScalarRing ScalarRing::mod_p(long p) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("Z_p requires an odd prime, got " + std::to_string(p));
  ScalarRing r;
  r.kind_ = Kind::ModP;
  r.p_ = p;
  return r;
}

std::string ScalarRing::label() const { return is_rational() ? "rational" : "modp:" + std::to_string(p_); }

Rational ScalarRing::reduce(const Rational& q) const {
  if (is_rational()) return q;
  Integer p(p_);
  Integer den = q.get_den();
  Integer den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw std::domain_error("denominator not invertible modulo " + std::to_string(p_));
  }
  Integer r = q.get_num() * den_inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Rational ScalarRing::inverse(const Rational& q) const {
  if (is_rational()) {
    if (q == 0) throw std::domain_error("division by zero");
    return 1 / q;
  }
  Rational r = reduce(q);
  if (r == 0) throw std::domain_error("zero has no inverse modulo " + std::to_string(p_));
  Integer inv, p(p_);
  Integer num = r.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Rational(inv);
}

bool ScalarRing::contains(const Rational& q) const {
  if (is_rational()) return true;
  return q.get_den() == 1 && q >= 0 && q < p_;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.size() != size()) throw std::invalid_argument("element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.size() != size()) throw std::invalid_argument("element size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

StructureConstant::StructureConstant(FiniteGroup group, RationalMatrix values, BasisConvention convention)
    : group_(std::move(group)), values_(std::move(values)), convention_(convention) {
  const auto n = static_cast<std::size_t>(group_.order());
  if (values_.rows() != n || values_.cols() != n) throw std::invalid_argument("structure constant size mismatch");
}

StructureConstant StructureConstant::from_rows(FiniteGroup group, const std::vector<std::vector<Rational>>& rows,
                                               BasisConvention convention) {
  const auto n = static_cast<std::size_t>(group.order());
  if (rows.size() != n) throw std::invalid_argument("structure constant needs one row per group element");
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("structure constant row has wrong length");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return StructureConstant(std::move(group), std::move(m), convention);
}

bool StructureConstant::is_unital() const {
  for (int g = 0; g < order(); ++g) {
    if ((*this)(0, g) != 1 || (*this)(g, 0) != 1) return false;
  }
  return true;
}

bool StructureConstant::is_sign_valued() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) {
      const auto& v = (*this)(a, b);
      if (v != 1 && v != -1) return false;
    }
  return true;
}

StructureConstant StructureConstant::transposed() const {
  BasisConvention flipped = convention_ == BasisConvention::LeftStandard ? BasisConvention::RightStandard
                                                                         : BasisConvention::LeftStandard;
  return StructureConstant(group_, values_.transposed(), flipped);
}

std::string StructureConstant::to_string() const {
  std::string out = "[";
  for (int a = 0; a < order(); ++a) {
    if (a) out += ",";
    out += "[";
    for (int b = 0; b < order(); ++b) {
      if (b) out += ",";
      out += (*this)(a, b).get_str();
    }
    out += "]";
  }
  return out + "]";
}

TwistedAlgebra::TwistedAlgebra(StructureConstant constant, ScalarRing ring, std::string name)
    : constant_(std::move(constant)), ring_(ring), name_(std::move(name)) {
  if (!constant_.is_unital()) throw std::invalid_argument("structure constant is not unital");
}

void TwistedAlgebra::check(const AlgebraElement& x) const {
  if (x.size() != static_cast<std::size_t>(dim())) throw std::invalid_argument("element has wrong dimension");
  if (!ring_.is_rational()) {
    for (const auto& c : x.coeffs) {
      if (!ring_.contains(c)) throw std::invalid_argument("ring mismatch: component " + c.get_str() + " not in " + ring_.label());
    }
  }
}

AlgebraElement TwistedAlgebra::zero() const { return AlgebraElement(RationalVector(static_cast<std::size_t>(dim()), 0)); }

AlgebraElement TwistedAlgebra::one() const { return basis(0); }

AlgebraElement TwistedAlgebra::basis(int g) const {
  if (g < 0 || g >= dim()) throw std::out_of_range("basis index out of range");
  auto e = zero();
  e[static_cast<std::size_t>(g)] = 1;
  return e;
}

AlgebraElement TwistedAlgebra::element(const RationalVector& coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(dim())) throw std::invalid_argument("element has wrong dimension");
  return reduce(AlgebraElement(coeffs));
}

AlgebraElement TwistedAlgebra::reduce(AlgebraElement x) const {
  if (!ring_.is_rational()) {
    for (auto& c : x.coeffs) c = ring_.reduce(c);
  }
  return x;
}

AlgebraElement TwistedAlgebra::product(const AlgebraElement& x, const AlgebraElement& y) const {
  check(x);
  check(y);
  return reduce(AlgebraElement(twisted_product(constant_, x.coeffs, y.coeffs)));
}

AlgebraElement TwistedAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const { return reduce(x + y); }

AlgebraElement TwistedAlgebra::scale(const Rational& s, const AlgebraElement& x) const { return reduce(s * x); }

RationalMatrix TwistedAlgebra::left_matrix(const AlgebraElement& y) const {
  check(y);
  const auto& g = group();
  const int n = dim();
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) {
      int b = g.mul(g.inverse(a), c);
      m(static_cast<std::size_t>(c), static_cast<std::size_t>(a)) = ring_.reduce(constant_(a, b) * y[static_cast<std::size_t>(b)]);
    }
  return m;
}

RationalMatrix TwistedAlgebra::right_matrix(const AlgebraElement& x) const {
  check(x);
  const auto& g = group();
  const int n = dim();
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      int a = g.mul(c, g.inverse(b));
      m(static_cast<std::size_t>(c), static_cast<std::size_t>(b)) = ring_.reduce(x[static_cast<std::size_t>(a)] * constant_(a, b));
    }
  return m;
}

bool TwistedAlgebra::supports_conjugation() const {
  switch (group().name()) {
    case GroupName::Trivial:
    case GroupName::Z2:
    case GroupName::Z4:
    case GroupName::Z2xZ2: return true;
    default: return false;
  }
}

AlgebraElement TwistedAlgebra::conjugate(const AlgebraElement& x) const {
  if (!supports_conjugation()) throw std::invalid_argument("conjugation is defined only for Z2, Z4 and Z2xZ2 gradings");
  check(x);
  AlgebraElement out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return reduce(out);
}

TwistedAlgebra TwistedAlgebra::opposite() const {
  if (!group().is_abelian()) throw std::invalid_argument("opposite algebra relabelling for nonabelian gradings is not implemented");
  std::string op_name = name_.empty() ? "" : name_ + "^op";
  if (name_.size() > 3 && name_.substr(name_.size() - 3) == "^op") op_name = name_.substr(0, name_.size() - 3);
  return TwistedAlgebra(constant_.transposed(), ring_, op_name);
}

StructureConstant complex_shape(const Rational& alpha) {
  return StructureConstant::from_rows(FiniteGroup::make(GroupName::Z2), {{1, 1}, {1, alpha}},
                                      BasisConvention::LeftStandard);
}

StructureConstant z4_shape(const Rational& alpha, const Rational& beta, const Rational& delta, const Rational& epsilon,
                           const Rational& phi, const Rational& omega) {
  return StructureConstant::from_rows(FiniteGroup::make(GroupName::Z4),
                                      {{1, 1, 1, 1}, {1, 1, 1, alpha}, {1, beta, -1, delta}, {1, epsilon, phi, omega}},
                                      BasisConvention::LeftStandard);
}

StructureConstant klein_shape(const Rational& alpha, const Rational& beta, const Rational& delta,
                              const Rational& epsilon, const Rational& phi) {
  return StructureConstant::from_rows(FiniteGroup::make(GroupName::Z2xZ2),
                                      {{1, 1, 1, 1}, {1, -1, 1, alpha}, {1, beta, -1, delta}, {1, epsilon, phi, -1}},
                                      BasisConvention::RightStandard);
}

StructureConstant quaternion_constant() { return klein_shape(-1, -1, 1, 1, -1); }

StructureConstant tesseranion_constant() { return z4_shape(-1, -1, 1, 1, -1, 1); }

namespace algebras {

TwistedAlgebra reals() {
  return TwistedAlgebra(StructureConstant::from_rows(FiniteGroup::make(GroupName::Trivial), {{1}},
                                                     BasisConvention::LeftStandard),
                        ScalarRing::rational(), "R");
}

TwistedAlgebra complex() { return TwistedAlgebra(complex_shape(-1), ScalarRing::rational(), "C"); }

TwistedAlgebra quaternions() { return TwistedAlgebra(quaternion_constant(), ScalarRing::rational(), "H"); }

TwistedAlgebra tesseranions(ScalarRing ring) { return TwistedAlgebra(tesseranion_constant(), ring, "T"); }

TwistedAlgebra by_name(const std::string& name) {
  if (name == "real" || name == "R") return reals();
  if (name == "complex" || name == "C") return complex();
  if (name == "quat" || name == "H") return quaternions();
  if (name == "tes" || name == "T") return tesseranions();
  if (name == "tes-op" || name == "T^op") return tesseranions().opposite();
  if (name == "quat-op" || name == "H^op") return quaternions().opposite();
  throw std::invalid_argument("unknown algebra: " + name);
}

}  // namespace algebras

}  // namespace tessera
