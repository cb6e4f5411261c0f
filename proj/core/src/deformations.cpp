#include "tessera/deformations.hpp"

#include <set>
#include <stdexcept>

#include "tessera/determinant.hpp"
#include "tessera/matrix.hpp"
#include "tessera/structure.hpp"

namespace tessera {

StructureConstant ParametricConstant::constant() const {
  return z4_shape(alpha, beta, delta, epsilon, phi, omega);
}

TwistedAlgebra ParametricConstant::algebra() const { return TwistedAlgebra(constant(), ScalarRing::rational(), to_string()); }

std::string ParametricConstant::to_string() const {
  return "(alpha, beta, delta, epsilon, phi, omega) = (" + tessera::to_string(alpha) + ", " + tessera::to_string(beta) +
         ", " + tessera::to_string(delta) + ", " + tessera::to_string(epsilon) + ", " + tessera::to_string(phi) + ", " +
         tessera::to_string(omega) + ")";
}

bool ParametricConstant::operator==(const ParametricConstant& o) const {
  return alpha == o.alpha && beta == o.beta && delta == o.delta && epsilon == o.epsilon && phi == o.phi &&
         omega == o.omega;
}

NecessaryConditionsResult neccons_check(const ParametricConstant& p) {
  for (const auto* v : {&p.alpha, &p.beta, &p.delta, &p.epsilon, &p.phi, &p.omega})
    if (*v == 0) throw std::invalid_argument("parameters must be nonzero: " + p.to_string());
  const std::vector<std::pair<std::string, Rational>> conditions{
      {"-epsilon beta > 0", -p.epsilon * p.beta},
      {"-alpha delta omega > 0", -p.alpha * p.delta * p.omega},
      {"-phi > 0", -p.phi},
      {"alpha beta omega > 0", p.alpha * p.beta * p.omega},
      {"epsilon delta > 0", p.epsilon * p.delta},
      {"-delta beta > 0", -p.delta * p.beta},
      {"-alpha epsilon omega > 0", -p.alpha * p.epsilon * p.omega},
  };
  NecessaryConditionsResult out;
  for (const auto& [name, value] : conditions)
    if (value <= 0) out.violated.push_back(name);
  out.passes = out.violated.empty();
  return out;
}

VarNames generic_variables() {
  static const VarNames vars =
      make_vars({"alpha", "beta", "delta", "epsilon", "phi", "omega", "y0", "y1", "y2", "y3"});
  return vars;
}

MultiPoly generic_left_determinant() {
  const auto vars = generic_variables();
  auto v = [&](const char* name) { return MultiPoly::variable(vars, name); };
  const MultiPoly one(vars, Rational(1));
  const std::vector<std::vector<MultiPoly>> rows{{one, one, one, one},
                                                 {one, one, one, v("alpha")},
                                                 {one, v("beta"), -one, v("delta")},
                                                 {one, v("epsilon"), v("phi"), v("omega")}};
  PolyMatrix c(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c(i, j) = rows[i][j];
  return symbolic_det(symbolic_left_matrix(c, FiniteGroup::make(GroupName::Z4), vars, 6));
}

MultiPoly left_determinant_formula() {
  const auto vars = generic_variables();
  auto v = [&](const char* name) { return MultiPoly::variable(vars, name); };
  const MultiPoly one(vars, Rational(1));
  auto a = v("alpha"), b = v("beta"), d = v("delta"), e = v("epsilon"), f = v("phi"), w = v("omega");
  auto y0 = v("y0"), y1 = v("y1"), y2 = v("y2"), y3 = v("y3");
  auto sq = [](const MultiPoly& p) { return p * p; };
  return sq(sq(y0)) - e * b * sq(sq(y1)) - f * sq(sq(y2)) - a * d * w * sq(sq(y3)) + (one - f) * sq(y0) * sq(y2) +
         (a * b * w + e * d) * sq(y1) * sq(y3) +
         ((e * (one + b) + f * b - one) * sq(y1) + (a * (d + f) - w * (one - d)) * sq(y3)) * y0 * y2 +
         ((w - e * d - f * (a * b - one)) * sq(y2) - (a + d + e + b * w) * sq(y0)) * y1 * y3;
}

const std::vector<FamilySpec>& families() {
  static const std::vector<FamilySpec> list{
      {1, "T1(k)", "alpha=-k, beta=-1, delta=1, epsilon=1, phi=-1, omega=k", "k > 0"},
      {2, "T2(k)", "alpha=-1, beta=-k, delta=k, epsilon=1, phi=-1, omega=1", "k > 0"},
      {3, "T3(k)", "alpha=-1, beta=-1, delta=1, epsilon=k, phi=-1, omega=k", "k > 0"},
      {4, "T4(k)", "alpha=-k, beta=-1, delta=1, epsilon=k, phi=-1, omega=k", "k > 2/sqrt(3) - 1"},
      {5, "T5(k)", "alpha=-1, beta=-1, delta=k, epsilon=1, phi=-1, omega=1", "0 < k <= 3 + 2 sqrt(3)"},
      {6, "T6(k)", "alpha=-1, beta=-1, delta=1, epsilon=1, phi=-1, omega=k", "0 < k <= 3 + 2 sqrt(3)"},
      {7, "T7(k)", "alpha=-1, beta=-k, delta=1, epsilon=1, phi=-1, omega=1", "0 < k <= 3 + 2 sqrt(3)"},
      {8, "T8(k)", "alpha=-k, beta=-1, delta=1, epsilon=1, phi=-1, omega=1", "0 < k <= 3 + 2 sqrt(3)"},
  };
  return list;
}

namespace {

void check_family(int id) {
  if (id < 1 || id > 8) throw std::out_of_range("family id must be in 1..8, got " + std::to_string(id));
}

}  // namespace

bool family_valid(int id, const Rational& k) {
  check_family(id);
  if (k <= 0) return false;
  if (id <= 3) return true;
  if (id == 4) return 3 * k * k + 6 * k - 1 > 0;
  return k * k - 6 * k - 3 <= 0;
}

ParametricConstant family_constant(int id, const Rational& k) {
  check_family(id);
  if (k == 0) throw std::invalid_argument("k must be nonzero");
  ParametricConstant p;
  switch (id) {
    case 1: p.alpha = -k; p.omega = k; break;
    case 2: p.beta = -k; p.delta = k; break;
    case 3: p.epsilon = k; p.omega = k; break;
    case 4: p.alpha = -k; p.epsilon = k; p.omega = k; break;
    case 5: p.delta = k; break;
    case 6: p.omega = k; break;
    case 7: p.beta = -k; break;
    default: p.alpha = -k; break;
  }
  return p;
}

std::string status_string(DeformationStatus s) {
  switch (s) {
    case DeformationStatus::Certified: return "certified";
    case DeformationStatus::NoWitnessFound: return "no-witness-found";
    default: return "zero-divisor";
  }
}

std::optional<ZeroWitness> witness_search(const ParametricConstant& p, const GridSpec& grid) {
  auto c = p.constant();
  if (auto w = find_zero_witness(det_left(c), grid)) return w;
  return find_zero_witness(det_right(c), grid);
}

DeformationReport analyze_deformation(const ParametricConstant& p, const GridSpec& grid) {
  DeformationReport r{p, neccons_check(p), {}, {}, DeformationStatus::NoWitnessFound};
  auto c = p.constant();
  for (auto* side : {&r.left, &r.right}) {
    side->determinant = side == &r.left ? det_left(c) : det_right(c);
    auto cert = find_sos(side->determinant);
    if (cert && certificate_is_definite(*cert, 4)) side->certificate = cert;
  }
  if (r.left.certificate && r.right.certificate) {
    r.status = DeformationStatus::Certified;
    return r;
  }
  for (auto* side : {&r.left, &r.right}) {
    if (side->certificate) continue;
    side->witness = find_zero_witness(side->determinant, grid);
    if (side->witness) {
      r.status = DeformationStatus::ZeroDivisor;
      break;
    }
  }
  return r;
}

EpsilonProbe epsilon_probe() {
  EpsilonProbe probe;
  probe.parameters.epsilon = -1;
  MultiPoly det = det_left(probe.parameters.constant());
  std::vector<std::optional<Rational>> bind{Rational(1), std::nullopt, Rational(1), Rational(0)};
  probe.restriction = UniPoly::from_multi(det.specialize(bind));
  // Even in y1, so evaluate the polynomial in u = y1^2 at u = 2.
  Rational value = 0;
  const auto& cs = probe.restriction.coeffs();
  for (std::size_t i = 0; i < cs.size(); i += 2) value += cs[i] * power(Rational(2), static_cast<unsigned>(i / 2));
  probe.value_at_root_squared = value;
  probe.roots = isolate_real_roots(probe.restriction, Rational(1, 1 << 20));
  return probe;
}

std::optional<StructureConstant> rebased_constant(const TwistedAlgebra& algebra, const AlgebraElement& generator) {
  if (algebra.group().name() != GroupName::Z4) throw std::invalid_argument("rebasing is implemented for Z4 gradings");
  AlgebraElement sq = algebra.product(generator, generator);
  std::vector<AlgebraElement> basis{algebra.one(), generator, sq, algebra.product(generator, sq)};
  RationalMatrix b(4, 4);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) b(r, c) = basis[c][r];
  if (determinant(b) == 0) return std::nullopt;
  RationalMatrix values(4, 4);
  const auto& g = algebra.group();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto coords = solve(b, algebra.product(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]).coeffs);
      auto target = static_cast<std::size_t>(g.mul(i, j));
      for (std::size_t k = 0; k < 4; ++k)
        if (k != target && coords[k] != 0) return std::nullopt;
      values(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coords[target];
    }
  return StructureConstant(g, values, BasisConvention::LeftStandard);
}

KInverseResult k_inverse_isomorphism(const Rational& k) {
  Rational s;
  if (k <= 0 || !rational_sqrt(k, s)) throw std::invalid_argument("k must be the square of a positive rational");
  if (s < 0) s = -s;
  auto algebra = family_constant(1, k).algebra();
  AlgebraElement g{0, 0, 0, 1 / s};
  auto rebased = rebased_constant(algebra, g);
  if (!rebased) throw std::logic_error("generator does not induce a graded basis");
  return {k, s, g, *rebased, family_constant(1, 1 / k).constant()};
}

namespace {

bool rescaled_matches(const BilinearAlgebra& source, const BilinearAlgebra& target, const RationalVector& d) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& p = source.product(i, j);
      for (std::size_t k = 0; k < 4; ++k)
        if (d[i] * d[j] * p[k] / d[k] != target.product(i, j)[k]) return false;
    }
  return true;
}

}  // namespace

RescalingResult commutator_rescaling(const Rational& k) {
  RescalingResult r;
  r.k = k;
  Rational half = (1 + k) / 2;
  Rational root;
  if (half <= 0 || !rational_sqrt(half, root)) return r;
  if (root < 0) root = -root;
  r.u = 1 / root;
  auto source = commutator_algebra(family_constant(1, k).algebra());
  auto target = commutator_algebra(algebras::tesseranions());
  r.v1_v2_matches = rescaled_matches(source, target, {1, *r.u, *r.u, 1});
  r.v1_v3_matches = rescaled_matches(source, target, {1, *r.u, 1, *r.u});
  return r;
}

NonIsomorphismEvidence nonisomorphism_evidence(const Rational& k, const Rational& k_prime, int height) {
  NonIsomorphismEvidence ev;
  ev.k = k;
  ev.k_prime = k_prime;
  ev.height = height;
  std::set<Rational> values;
  for (int q = 1; q <= height; ++q)
    for (int p = -height; p <= height; ++p) {
      Rational v(p, q);
      v.canonicalize();
      values.insert(v);
    }
  auto algebra = family_constant(1, k).algebra();
  auto expected = family_constant(1, k_prime).constant();
  for (const auto& a1 : values)
    for (const auto& a3 : values) {
      if (a1 == 0 && a3 == 0) continue;
      ++ev.generators_tested;
      AlgebraElement g{0, a1, 0, a3};
      auto rebased = rebased_constant(algebra, g);
      if (rebased && *rebased == expected) ev.rebasings.push_back(g);
    }
  return ev;
}

}  // namespace tessera
