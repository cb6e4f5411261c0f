#include "tessera/norms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "tessera/identities.hpp"
#include "tessera/univariate.hpp"

namespace tessera {

namespace {

const TwistedAlgebra& tes() {
  static const TwistedAlgebra algebra = algebras::tesseranions();
  return algebra;
}

void require_tesseranion(const AlgebraElement& x) {
  if (x.size() != 4) throw std::invalid_argument("expected a tesseranion with 4 components");
}

bool all_zero(const SymbolicElement& e) {
  for (const auto& p : e)
    if (!p.is_zero()) return false;
  return true;
}

Rational sum_of_squares(const RationalVector& v, std::size_t begin, std::size_t end) {
  Rational s = 0;
  for (std::size_t i = begin; i < end; ++i) s += v[i] * v[i];
  return s;
}

Rational iterated_power(unsigned j, const RationalVector& v, std::size_t begin, std::size_t end) {
  if (j == 1) return sum_of_squares(v, begin, end);
  std::size_t mid = begin + (end - begin) / 2;
  Rational u = iterated_power(j - 1, v, begin, mid);
  Rational r = iterated_power(j - 1, v, mid, end);
  return u * u + r * r;
}

MultiPoly iterated_poly(unsigned j, const std::vector<MultiPoly>& v, std::size_t begin, std::size_t end) {
  if (j == 1) {
    MultiPoly s;
    for (std::size_t i = begin; i < end; ++i) s += v[i] * v[i];
    return s;
  }
  std::size_t mid = begin + (end - begin) / 2;
  MultiPoly u = iterated_poly(j - 1, v, begin, mid);
  MultiPoly r = iterated_poly(j - 1, v, mid, end);
  return u * u + r * r;
}

// Enclosure of q^(1/e) seeded by the floating-point root and confirmed exactly;
// falls back to bisection when the seed does not bracket the root.
RootInterval root_enclosure(const Rational& q, unsigned e, double relative) {
  if (q == 0) return {Rational(0), Rational(0)};
  double approx = std::pow(q.get_d(), 1.0 / e);
  if (std::isfinite(approx) && approx > 0) {
    Rational lo(approx * (1 - relative));
    Rational hi(approx * (1 + relative));
    if (power(lo, e) <= q && power(hi, e) >= q) return {lo, hi};
  }
  Rational scale = q > 1 ? q : Rational(1);
  return nth_root_enclosure(q, e, Rational(relative) * scale);
}

// y = lambda x with lambda >= 0, or x = 0: then M(x + y) = M(x) + M(y) exactly.
bool nonnegatively_proportional(const RationalVector& x, const RationalVector& y) {
  if (is_zero(x) || is_zero(y)) return true;
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      if (y[i] != 0) return false;
      continue;
    }
    Rational r = y[i] / x[i];
    if (r < 0 || (lambda && *lambda != r)) return false;
    lambda = r;
  }
  return true;
}

}  // namespace

Rational quartic_norm4(const AlgebraElement& x) {
  require_tesseranion(x);
  Rational even = x[0] * x[0] + x[2] * x[2];
  Rational odd = x[1] * x[1] + x[3] * x[3];
  return even * even + odd * odd;
}

QuarticNormValue quartic_norm(const AlgebraElement& x) {
  QuarticNormValue v;
  v.fourth_power = quartic_norm4(x);
  v.float_root = std::pow(v.fourth_power.get_d(), 0.25);
  return v;
}

const std::vector<std::string>& quartic_norm_expressions() {
  static const std::vector<std::string> exprs{
      "bar(x*(x*bar(x)))*x",
      "bar(bar(x)*x^2)*x",
      "x*bar((x*bar(x))*x)",
      "x*bar(x^2*bar(x))",
      "(x*bar(x))*bar(x*bar(x))",
  };
  return exprs;
}

std::vector<AlgebraElement> quartic_norm_products(const AlgebraElement& x) {
  require_tesseranion(x);
  std::vector<AlgebraElement> out;
  for (const auto& text : quartic_norm_expressions())
    out.push_back(evaluate_numeric(Expr::parse(text), tes(), {{"x", x}}));
  return out;
}

bool quartic_norm_expressions_agree() {
  auto ctx = make_symbolic_context(4, {"x"});
  const auto& x = ctx.elements.at("x");
  MultiPoly even = x[0] * x[0] + x[2] * x[2];
  MultiPoly odd = x[1] * x[1] + x[3] * x[3];
  SymbolicElement expected{even * even + odd * odd, MultiPoly(ctx.vars), MultiPoly(ctx.vars), MultiPoly(ctx.vars)};
  for (const auto& text : quartic_norm_expressions()) {
    auto value = evaluate_symbolic(Expr::parse(text), tes().constant(), ctx.elements, ctx.vars);
    for (std::size_t i = 0; i < 4; ++i)
      if (value[i] != expected[i]) return false;
  }
  return true;
}

Rational schwarz_defect4(const AlgebraElement& x, const AlgebraElement& y) {
  return quartic_norm4(x) * quartic_norm4(y) - quartic_norm4(tes().product(x, y));
}

bool is_pure_even(const AlgebraElement& x) {
  require_tesseranion(x);
  return x[1] == 0 && x[3] == 0;
}

bool is_pure_odd(const AlgebraElement& x) {
  require_tesseranion(x);
  return x[0] == 0 && x[2] == 0;
}

Rational schwarz_equality_pure(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(is_pure_even(x) || is_pure_odd(x) || is_pure_even(y) || is_pure_odd(y)))
    throw std::invalid_argument("one factor must be pure even or pure odd");
  return schwarz_defect4(x, y);
}

bool quaternion_schwarz_symbolic() {
  auto ctx = make_symbolic_context(4, {"x", "y"});
  const auto& x = ctx.elements.at("x");
  const auto& y = ctx.elements.at("y");
  auto xy = twisted_product(quaternion_constant(), x, y);
  MultiPoly nx, ny, nxy;
  for (std::size_t i = 0; i < 4; ++i) {
    nx += x[i] * x[i];
    ny += y[i] * y[i];
    nxy += xy[i] * xy[i];
  }
  return (nxy - nx * ny).is_zero();
}

IteratedNormValue iterated_norm(const IteratedNormSpec& spec, const RationalVector& v) {
  if (spec.j < 1 || spec.n < 1) throw std::invalid_argument("iterated norm needs j >= 1 and n >= 1");
  if (v.size() != spec.input_length())
    throw std::invalid_argument("iterated norm M_" + std::to_string(spec.j) + " with n = " + std::to_string(spec.n) +
                                " expects " + std::to_string(spec.input_length()) + " components, got " +
                                std::to_string(v.size()));
  IteratedNormValue out;
  out.exponent = spec.exponent();
  out.power = iterated_power(spec.j, v, 0, v.size());
  out.value = std::pow(out.power.get_d(), 1.0 / out.exponent);
  return out;
}

MultiPoly iterated_norm_power(const IteratedNormSpec& spec, const std::vector<MultiPoly>& v) {
  if (v.size() != spec.input_length()) throw std::invalid_argument("iterated norm input has the wrong length");
  return iterated_poly(spec.j, v, 0, v.size());
}

bool iterated_norm_matches_quartic() {
  auto ctx = make_symbolic_context(4, {"x"});
  const auto& x = ctx.elements.at("x");
  MultiPoly m2 = iterated_norm_power({2, 2}, {x[0], x[2], x[1], x[3]});
  MultiPoly even = x[0] * x[0] + x[2] * x[2];
  MultiPoly odd = x[1] * x[1] + x[3] * x[3];
  return m2 == even * even + odd * odd;
}

Comparison root_sum_compare(const Rational& a, const Rational& b, const Rational& c, unsigned e) {
  for (double relative : {1e-12, 0x1p-64}) {
    auto ra = root_enclosure(a, e, relative);
    auto rb = root_enclosure(b, e, relative);
    auto rc = root_enclosure(c, e, relative);
    if (rc.hi < ra.lo + rb.lo) return Comparison::Holds;
    if (rc.lo > ra.hi + rb.hi) return Comparison::Violated;
  }
  return Comparison::Tight;
}

NormPropertyReport triangle_check(const IteratedNormSpec& spec, std::size_t samples, std::uint64_t seed, int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-range, range);
  const std::size_t len = spec.input_length();
  NormPropertyReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector x(len), y(len), sum(len);
    for (std::size_t i = 0; i < len; ++i) {
      x[i] = dist(rng);
      y[i] = dist(rng);
      sum[i] = x[i] + y[i];
    }
    ++report.samples;
    if (nonnegatively_proportional(x, y)) {
      ++report.equality;
      continue;
    }
    auto cmp = root_sum_compare(iterated_norm(spec, x).power, iterated_norm(spec, y).power,
                                iterated_norm(spec, sum).power, spec.exponent());
    if (cmp == Comparison::Holds) {
      ++report.strict;
    } else if (cmp == Comparison::Tight) {
      ++report.tight;
    } else {
      ++report.violations;
      if (!report.counterexample) report.counterexample = std::make_pair(x, y);
    }
  }
  return report;
}

NormPropertyReport positive_homogeneity_check(const IteratedNormSpec& spec, std::size_t samples, std::uint64_t seed,
                                              int range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-range, range);
  std::uniform_int_distribution<int> den(1, range);
  const std::size_t len = spec.input_length();
  NormPropertyReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector x(len);
    for (auto& c : x) c = dist(rng);
    Rational lambda(dist(rng), den(rng));
    lambda.canonicalize();
    RationalVector scaled = x;
    for (auto& c : scaled) c *= lambda;
    ++report.samples;
    if (iterated_norm(spec, scaled).power == power(lambda, spec.exponent()) * iterated_norm(spec, x).power) {
      ++report.strict;
    } else {
      ++report.violations;
      if (!report.counterexample) report.counterexample = std::make_pair(x, RationalVector{lambda});
    }
  }
  return report;
}

double triangle_defect(const AlgebraElement& x, const AlgebraElement& y) {
  return quartic_norm(x).float_root + quartic_norm(y).float_root - quartic_norm(x + y).float_root;
}

std::pair<AlgebraElement, AlgebraElement> inverse_formulas(const AlgebraElement& x) {
  Rational n4 = quartic_norm4(x);
  if (n4 == 0) throw std::domain_error("zero has no inverse");
  const auto& t = tes();
  AlgebraElement xbar = t.conjugate(x);
  AlgebraElement sq = t.product(x, x);
  Rational s = 1 / n4;
  return {t.scale(s, t.conjugate(t.product(xbar, sq))), t.scale(s, t.conjugate(t.product(sq, xbar)))};
}

bool pure_even_associativity() {
  auto ctx = make_symbolic_context(4, {"x", "y", "z"});
  ctx.elements["x"][1] = MultiPoly(ctx.vars);
  ctx.elements["x"][3] = MultiPoly(ctx.vars);
  for (const char* law : {"x*(y*z) - (x*y)*z", "y*(x*z) - (y*x)*z", "y*(z*x) - (y*z)*x"}) {
    if (!all_zero(evaluate_symbolic(Expr::parse(law), tes().constant(), ctx.elements, ctx.vars))) return false;
  }
  return true;
}

bool conjugate_product_identity() {
  auto identity = Identity::parse("conjugate of a product", "bar(x*y) = w3*(((w3*(bar(y)*w))*(w3*(bar(x)*w)))*w)");
  return verify_expression_identity(tes(), identity, {{"w", AlgebraElement{0, 1, 0, 0}}, {"w3", AlgebraElement{0, 0, 0, 1}}});
}

Rational generation_determinant(const AlgebraElement& x) {
  require_tesseranion(x);
  const auto& t = tes();
  AlgebraElement sq = t.product(x, x);
  std::vector<AlgebraElement> cols{t.one(), x, sq, t.product(x, sq)};
  RationalMatrix m(4, 4);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = cols[c][r];
  return determinant(m);
}

bool generates_algebra(const AlgebraElement& x) { return generation_determinant(x) != 0; }

TesseranionCipher::TesseranionCipher(long p, const RationalVector& key, CipherSide side)
    : algebra_(algebras::tesseranions(ScalarRing::rational())), side_(side) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
  algebra_ = algebras::tesseranions(ScalarRing::mod_p(p));
  if (key.size() != 4) throw std::invalid_argument("key must have 4 components");
  key_ = algebra_.element(key);
  Rational n4 = algebra_.ring().reduce(quartic_norm4(key_));
  if (n4 == 0) throw std::invalid_argument("key has |a|^4 = 0 mod " + std::to_string(p));
  inverse_norm4_ = algebra_.ring().inverse(n4);
}

AlgebraElement TesseranionCipher::encrypt(const RationalVector& message) const {
  if (message.size() != 4) throw std::invalid_argument("message must have 4 components");
  const auto& t = algebra_;
  AlgebraElement m = t.element(message);
  AlgebraElement kbar = t.conjugate(key_);
  AlgebraElement pair = t.product(key_, kbar);
  if (side_ == CipherSide::Left) return t.scale(inverse_norm4_, t.product(t.product(kbar, m), t.conjugate(pair)));
  return t.scale(inverse_norm4_, t.product(t.conjugate(pair), t.product(m, kbar)));
}

AlgebraElement TesseranionCipher::decrypt(const AlgebraElement& cipher) const {
  AlgebraElement x = algebra_.element(cipher.coeffs);
  return side_ == CipherSide::Left ? algebra_.product(key_, x) : algebra_.product(x, key_);
}

bool cipher_identities_hold() {
  for (const auto& check : verify_conjugate_identities(tes()))
    if (!check.holds) return false;
  return pure_even_associativity();
}

}  // namespace tessera
