#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tessera/polynomial.hpp"
#include "tessera/rational.hpp"

namespace tessera {

// Dense univariate polynomial, coefficients from constant term upward.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(RationalVector coeffs);

  // Converts a polynomial whose support is at most one variable.
  static UniPoly from_multi(const MultiPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RationalVector& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  std::string to_string(const std::string& var = "s") const;

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim();
  RationalVector coeffs_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly square_free_part(const UniPoly& p);

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi);
int count_real_roots(const UniPoly& p);
// Cauchy bound: every real root r satisfies |r| < bound.
Rational root_bound(const UniPoly& p);

struct RootInterval {
  Rational lo;
  Rational hi;
  // Exact root when lo == hi.
  bool exact() const { return lo == hi; }
};

// Disjoint intervals each containing exactly one distinct real root, refined
// until hi - lo <= width.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width = Rational(1, 1024));

// Decides existence of a real root exactly by a Sturm count; throws on the zero polynomial.
bool univariate_real_root_exists(const MultiPoly& p);
bool univariate_real_root_exists(const UniPoly& p);

// Smallest positive rational r (found by bisection to within `width`) with r^n >= q and
// largest with r^n <= q; returns the enclosure [lo, hi] of q^(1/n) for q >= 0.
RootInterval nth_root_enclosure(const Rational& q, unsigned n, const Rational& width);

}  // namespace tessera
