#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/expression.hpp"

namespace tessera {

// |x|^4 for a tesseranion: (x0^2 + x2^2)^2 + (x1^2 + x3^2)^2.
struct QuarticNormValue {
  Rational fourth_power;
  double float_root = 0.0;
};

Rational quartic_norm4(const AlgebraElement& x);
QuarticNormValue quartic_norm(const AlgebraElement& x);

// The five product expressions whose real part is |x|^4, in the order
//   bar(x(x bar x)) x, bar(bar x x^2) x, x bar((x bar x) x), x bar(x^2 bar x), (x bar x) bar(x bar x).
const std::vector<std::string>& quartic_norm_expressions();
std::vector<AlgebraElement> quartic_norm_products(const AlgebraElement& x);
// Every expression equals [(x0^2+x2^2)^2 + (x1^2+x3^2)^2, 0, 0, 0] over generic x.
bool quartic_norm_expressions_agree();

// |x|^4 |y|^4 - |x.y|^4
Rational schwarz_defect4(const AlgebraElement& x, const AlgebraElement& y);

bool is_pure_even(const AlgebraElement& x);
bool is_pure_odd(const AlgebraElement& x);
// Requires one factor pure even or pure odd; returns the defect, which is then zero.
Rational schwarz_equality_pure(const AlgebraElement& x, const AlgebraElement& y);

// |x.y|^2 = |x|^2 |y|^2 over generic quaternions.
bool quaternion_schwarz_symbolic();

// M_1 is the Euclidean norm on R^n; M_j(u, r) = (M_{j-1}(u)^(2^j) + M_{j-1}(r)^(2^j))^(1/2^j)
// on R^(n 2^(j-1)). The 2^j-th power is a polynomial and is kept exactly.
struct IteratedNormSpec {
  unsigned j = 1;
  std::size_t n = 1;

  std::size_t input_length() const { return n << (j - 1); }
  unsigned exponent() const { return 1u << j; }
};

struct IteratedNormValue {
  Rational power;
  unsigned exponent = 2;
  double value = 0.0;
};

IteratedNormValue iterated_norm(const IteratedNormSpec& spec, const RationalVector& v);
MultiPoly iterated_norm_power(const IteratedNormSpec& spec, const std::vector<MultiPoly>& v);

// M_2 with n = 2 on (x0, x2, x1, x3) has fourth power |x|^4, as polynomials.
bool iterated_norm_matches_quartic();

// a^(1/e) + b^(1/e) - c^(1/e) for nonnegative rationals; exact comparisons use
// rational enclosures of the roots.
enum class Comparison { Holds, Tight, Violated };
Comparison root_sum_compare(const Rational& a, const Rational& b, const Rational& c, unsigned e);

struct NormPropertyReport {
  std::size_t samples = 0;
  std::size_t strict = 0;
  // Proportional pairs, where equality is exact.
  std::size_t equality = 0;
  // Enclosures narrower than 2^-64 could not separate both sides.
  std::size_t tight = 0;
  std::size_t violations = 0;
  std::optional<std::pair<RationalVector, RationalVector>> counterexample;
  bool holds() const { return violations == 0; }
};

// Integer samples in [-range, range] drawn from mt19937_64(seed).
NormPropertyReport triangle_check(const IteratedNormSpec& spec, std::size_t samples, std::uint64_t seed = 1,
                                  int range = 9);
NormPropertyReport positive_homogeneity_check(const IteratedNormSpec& spec, std::size_t samples,
                                              std::uint64_t seed = 1, int range = 9);

// |x| + |y| - |x + y| for tesseranions, as a float.
double triangle_defect(const AlgebraElement& x, const AlgebraElement& y);

// LI(x) = bar(bar x . x^2) / |x|^4 and RI(x) = bar(x^2 . bar x) / |x|^4; throws std::domain_error for x = 0.
std::pair<AlgebraElement, AlgebraElement> inverse_formulas(const AlgebraElement& x);

// x(yz) = (xy)z, y(xz) = (yx)z and y(zx) = (yz)x for pure even x and generic y, z.
bool pure_even_associativity();
// bar(x.y) = w^3 . ([(w^3 . (bar y . w)) . (w^3 . (bar x . w))] . w) over generic x, y.
bool conjugate_product_identity();

// det[1, x, x^2, x.x^2] as a 4x4 matrix of components.
Rational generation_determinant(const AlgebraElement& x);
bool generates_algebra(const AlgebraElement& x);

// a.x = c is solved by x = |a|^-4 (bar a . c) . bar(a . bar a); y.b = d by
// y = |b|^-4 bar(b . bar b) . (d . bar b). Arithmetic is in Z_p.
enum class CipherSide { Left, Right };

class TesseranionCipher {
 public:
  // Throws std::invalid_argument when p is not an odd prime or |key|^4 = 0 mod p.
  TesseranionCipher(long p, const RationalVector& key, CipherSide side = CipherSide::Left);

  long modulus() const { return algebra_.ring().modulus(); }
  CipherSide side() const { return side_; }
  const AlgebraElement& key() const { return key_; }
  const TwistedAlgebra& algebra() const { return algebra_; }

  AlgebraElement encrypt(const RationalVector& message) const;
  AlgebraElement decrypt(const AlgebraElement& cipher) const;

 private:
  TwistedAlgebra algebra_;
  AlgebraElement key_;
  CipherSide side_;
  Rational inverse_norm4_;
};

// The conjugate identities used by the cipher hold over Q as integer polynomial
// identities, hence also modulo every prime.
bool cipher_identities_hold();

}  // namespace tessera
