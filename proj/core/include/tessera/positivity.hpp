#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tessera/polynomial.hpp"
#include "tessera/univariate.hpp"

namespace tessera {

struct SosTerm {
  Rational coef;
  MultiPoly base;
};

struct SosCertificate {
  std::vector<SosTerm> terms;
  std::string to_string() const;
};

// True iff sum coef_i * base_i^2 - p is the zero polynomial and every coef_i > 0.
bool verify_sos(const MultiPoly& p, const SosCertificate& cert);

// Gram-matrix heuristics with exact LDL^T; returns a verified certificate or nothing.
std::optional<SosCertificate> find_sos(const MultiPoly& p);

// The squares of a certificate vanish together only at the origin: bases are
// scanned repeatedly and a base that restricts to a single-variable monomial,
// to linear forms pinning a variable, or to a positive-definite quadratic form
// forces its variables to zero. True when all variables are forced.
bool certificate_is_definite(const SosCertificate& cert, std::size_t nvars);

struct GridSpec {
  int bound = 3;
  std::vector<int> denominators{1, 2};
  std::size_t max_points = 200000;
};

// p(positive) > 0 and p(nonpositive) <= 0; the segment between them avoids the
// origin, so continuity gives a nonzero real root.
struct SignChangeWitness {
  RationalVector positive;
  RationalVector nonpositive;
  Rational positive_value;
  Rational nonpositive_value;
};

// Restriction of p to the line base + s*e_var has a real root inside interval,
// and base has a nonzero coordinate off `var`, so the root is a nonzero point.
struct SliceRootWitness {
  RationalVector base;
  std::size_t var = 0;
  UniPoly restriction;
  RootInterval interval;
};

using ZeroWitness = std::variant<SignChangeWitness, SliceRootWitness>;

bool verify_witness(const MultiPoly& p, const SignChangeWitness& w);
bool verify_witness(const MultiPoly& p, const SliceRootWitness& w);
bool verify_witness(const MultiPoly& p, const ZeroWitness& w);
std::string witness_kind(const ZeroWitness& w);
std::string describe(const ZeroWitness& w);
nlohmann::ordered_json witness_to_json(const ZeroWitness& w);

// Structured probes first (one nonzero component, two nonzero components,
// one zero component), then the dense grid.
std::optional<SignChangeWitness> find_sign_change(const MultiPoly& p, const GridSpec& grid = {});
// Lines with one free coordinate and the others drawn from {-2,...,2}.
std::optional<SliceRootWitness> find_slice_root(const MultiPoly& p, int range = 2);
std::optional<ZeroWitness> find_zero_witness(const MultiPoly& p, const GridSpec& grid = {});

}  // namespace tessera
