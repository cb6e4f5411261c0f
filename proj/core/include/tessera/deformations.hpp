#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/polynomial.hpp"
#include "tessera/positivity.hpp"
#include "tessera/univariate.hpp"

namespace tessera {

// The six-parameter Z4 shape (left-standard) with arbitrary nonzero rational parameters.
struct ParametricConstant {
  Rational alpha = -1, beta = -1, delta = 1, epsilon = 1, phi = -1, omega = 1;

  static ParametricConstant tesseranion() { return {}; }
  StructureConstant constant() const;
  TwistedAlgebra algebra() const;
  std::string to_string() const;
  bool operator==(const ParametricConstant& o) const;
};

struct NecessaryConditionsResult {
  bool passes = false;
  // Names of the failing inequalities, e.g. "-phi > 0".
  std::vector<std::string> violated;
};

// -eps beta > 0, -alpha delta omega > 0, -phi > 0, alpha beta omega > 0, eps delta > 0,
// and the consequences -delta beta > 0, -alpha eps omega > 0.
// Throws std::invalid_argument when a parameter is zero.
NecessaryConditionsResult neccons_check(const ParametricConstant& p);

// det M^L for generic parameters, over the variables alpha, beta, delta, epsilon, phi, omega, y0..y3.
VarNames generic_variables();
MultiPoly generic_left_determinant();
// Closed form:
//   y0^4 - eps beta y1^4 - phi y2^4 - alpha delta omega y3^4 + (1 - phi) y0^2 y2^2
//   + (alpha beta omega + eps delta) y1^2 y3^2
//   + [(eps (1 + beta) + phi beta - 1) y1^2 + (alpha (delta + phi) - omega (1 - delta)) y3^2] y0 y2
//   + [(omega - eps delta - phi (alpha beta - 1)) y2^2 - (alpha + delta + eps + beta omega) y0^2] y1 y3
MultiPoly left_determinant_formula();

struct FamilySpec {
  int id = 1;
  std::string name;
  std::string parameters;
  std::string validity;
};

const std::vector<FamilySpec>& families();
// Exact predicates: k > 0 for 1-3; 3k^2 + 6k - 1 > 0 for 4; k^2 - 6k - 3 <= 0 for 5-8.
bool family_valid(int id, const Rational& k);
// Any k != 0 is accepted so out-of-range parameters can still be probed; k = 1 gives C_T.
ParametricConstant family_constant(int id, const Rational& k);

enum class DeformationStatus { Certified, NoWitnessFound, ZeroDivisor };
std::string status_string(DeformationStatus s);

struct DeformationSide {
  MultiPoly determinant;
  std::optional<SosCertificate> certificate;
  std::optional<ZeroWitness> witness;
};

struct DeformationReport {
  ParametricConstant parameters;
  NecessaryConditionsResult neccons;
  DeformationSide left;
  DeformationSide right;
  DeformationStatus status = DeformationStatus::NoWitnessFound;
};

// Sign-change and slice-root search on det M^L, then det M^R.
std::optional<ZeroWitness> witness_search(const ParametricConstant& p, const GridSpec& grid = {});
// Certified when both determinants carry definite SOS certificates; otherwise a
// witness decides ZeroDivisor, and an exhausted search is reported as such.
DeformationReport analyze_deformation(const ParametricConstant& p, const GridSpec& grid = {});

// The Z4 shape with eps = -1, the rest as in T: det M^L restricted to y0 = y2 = 1, y3 = 0
// as a polynomial in y1, which vanishes at y1^2 = 2.
struct EpsilonProbe {
  ParametricConstant parameters;
  UniPoly restriction;
  Rational value_at_root_squared;
  std::vector<RootInterval> roots;
};
EpsilonProbe epsilon_probe();

// Basis {1, g, g^2, g.g^2} and the constant it induces; nothing when the
// products are not graded multiples or the basis is singular.
std::optional<StructureConstant> rebased_constant(const TwistedAlgebra& algebra, const AlgebraElement& generator);

struct KInverseResult {
  Rational k;
  Rational s;
  AlgebraElement generator;
  StructureConstant rebased;
  StructureConstant expected;
  bool matches() const { return rebased == expected; }
};
// Family 1 at k = s^2, rebased on [0, 0, 0, 1/s], against family 1 at 1/k.
// Throws std::invalid_argument unless k is the square of a positive rational.
KInverseResult k_inverse_isomorphism(const Rational& k);

struct RescalingResult {
  Rational k;
  std::optional<Rational> u;
  // v1' = u v1, v2' = u v2
  bool v1_v2_matches = false;
  // v1' = u v1, v3' = u v3
  bool v1_v3_matches = false;
  bool matches() const { return v1_v3_matches; }
};
// u^-2 = (1 + k)/2; compares the rescaled commutator algebra of family 1 with that of T.
RescalingResult commutator_rescaling(const Rational& k);

struct NonIsomorphismEvidence {
  Rational k;
  Rational k_prime;
  int height = 0;
  std::size_t generators_tested = 0;
  std::vector<AlgebraElement> rebasings;
  bool rebasing_found() const { return !rebasings.empty(); }
};
// Tries every generator [0, a1, 0, a3] with a1, a3 = p/q, |p| <= height, 1 <= q <= height.
NonIsomorphismEvidence nonisomorphism_evidence(const Rational& k, const Rational& k_prime, int height = 4);

}  // namespace tessera
