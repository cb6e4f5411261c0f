#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tessera {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "3", "-7/4", "0.25" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

inline int sign(const Rational& q) { return sgn(q); }

Rational power(const Rational& base, unsigned exponent);

bool is_zero(const RationalVector& v);

// Returns s with s*s == q when q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace tessera
