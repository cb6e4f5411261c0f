#include "tessera/cli/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tessera/classification.hpp"
#include "tessera/cohomology.hpp"
#include "tessera/deformations.hpp"
#include "tessera/determinant.hpp"
#include "tessera/expression.hpp"
#include "tessera/identities.hpp"
#include "tessera/norms.hpp"
#include "tessera/structure.hpp"

namespace tessera::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed requirements; the detail line lists what was checked.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void info(const std::string& text) { info_.push_back(text); }
  bool ok() const { return failures_.empty(); }

  std::string detail() const {
    std::string out;
    auto join = [&](const std::vector<std::string>& parts) {
      for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
      }
    };
    if (!failures_.empty()) {
      out = "FAILED: ";
      std::string f;
      for (const auto& p : failures_) f += (f.empty() ? "" : ", ") + p;
      out += f;
    }
    join(info_);
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> info_;
};

CriterionResult finish(const Check& check, std::string note = "") {
  CriterionResult r;
  r.passed = check.ok();
  r.detail = check.detail();
  r.note = std::move(note);
  return r;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

const char kZ2Survivor[] =
    "| C | 0 |  1 |\n"
    "|---|--:|---:|\n"
    "| 0 | 1 |  1 |\n"
    "| 1 | 1 | -1 |\n";

const char kKleinSurvivor[] =
    "| C     | (0,0) | (1,0) | (0,1) | (1,1) |\n"
    "|-------|------:|------:|------:|------:|\n"
    "| (0,0) |     1 |     1 |     1 |     1 |\n"
    "| (1,0) |     1 |    -1 |     1 |    -1 |\n"
    "| (0,1) |     1 |    -1 |    -1 |     1 |\n"
    "| (1,1) |     1 |     1 |    -1 |    -1 |\n";

const char kZ4Survivor[] =
    "| C | 0 |  1 |  2 |  3 |\n"
    "|---|--:|---:|---:|---:|\n"
    "| 0 | 1 |  1 |  1 |  1 |\n"
    "| 1 | 1 |  1 |  1 | -1 |\n"
    "| 2 | 1 | -1 | -1 |  1 |\n"
    "| 3 | 1 |  1 | -1 |  1 |\n";

ClassifyOptions classify_options(const AcceptanceOptions& o) {
  ClassifyOptions c;
  c.threads = o.threads;
  return c;
}

CriterionResult classification_uniqueness(const AcceptanceOptions& opts) {
  struct Case {
    GroupName group;
    BasisConvention convention;
    const char* table;
    const char* label;
  };
  const Case cases[] = {{GroupName::Z2, BasisConvention::LeftStandard, kZ2Survivor, "Z2"},
                        {GroupName::Z2xZ2, BasisConvention::RightStandard, kKleinSurvivor, "Z2xZ2 right"},
                        {GroupName::Z4, BasisConvention::LeftStandard, kZ4Survivor, "Z4 left"}};
  Check check;
  CriterionResult out;
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    auto report = classify(FiniteGroup::make(c.group), c.convention, CandidateMode::Shaped, classify_options(opts));
    double dt = seconds_since(t0);
    check.require(report.survivors.size() == 1, std::string(c.label) + " survivor count");
    if (report.survivors.size() == 1)
      check.require(constant_markdown(report.survivors[0].candidate.constant) == c.table, std::string(c.label) + " table");
    check.require(report.undetermined.empty(), std::string(c.label) + " undetermined");
    check.require(dt < 1.0, std::string(c.label) + " runtime");
    check.info(std::string(c.label) + ": " + std::to_string(report.survivors.size()) + " survivor of " +
               std::to_string(report.candidates_examined));
    out.timings.emplace_back(c.label, dt);
  }
  out.passed = check.ok();
  out.detail = check.detail();
  return out;
}

MultiPoly sum_sq(const VarNames& vars, std::initializer_list<std::size_t> idx) {
  MultiPoly s(vars);
  for (auto i : idx) s += MultiPoly::variable(vars, i) * MultiPoly::variable(vars, i);
  return s;
}

CriterionResult survivor_certificates(const AcceptanceOptions&) {
  Check check;
  auto vars = component_vars(4);
  MultiPoly h = sum_sq(vars, {0, 1, 2, 3});
  h = h * h;
  MultiPoly even = sum_sq(vars, {0, 2}), odd = sum_sq(vars, {1, 3});
  MultiPoly t = even * even + odd * odd;
  auto hq = quaternion_constant(), tc = tesseranion_constant();
  check.require(det_left(hq) == h, "det M^L(H)");
  check.require(det_right(hq) == h, "det M^R(H)");
  check.require(det_left(tc) == t, "det M^L(T)");
  check.require(det_right(tc) == t, "det M^R(T)");
  for (const auto& c : {hq, tc}) {
    for (const auto& det : {det_left(c), det_right(c)}) {
      auto cert = find_sos(det);
      check.require(cert && verify_sos(det, *cert) && certificate_is_definite(*cert, 4), "definite SOS certificate");
    }
  }
  check.info("H: " + h.to_string());
  check.info("T: " + t.to_string());
  return finish(check);
}

CriterionResult rejection_completeness(const AcceptanceOptions& opts) {
  Check check;
  std::size_t slice_total = 0;
  struct Case {
    GroupName group;
    BasisConvention convention;
    std::size_t expected;
    const char* label;
  };
  for (const Case& c : {Case{GroupName::Z4, BasisConvention::LeftStandard, 63, "Z4"},
                        Case{GroupName::Z2xZ2, BasisConvention::RightStandard, 31, "Z2xZ2"}}) {
    auto report = classify(FiniteGroup::make(c.group), c.convention, CandidateMode::Shaped, classify_options(opts));
    check.require(report.rejected.size() == c.expected, std::string(c.label) + " rejected count");
    check.require(report.undetermined.empty(), std::string(c.label) + " undetermined bucket");
    std::size_t verified = 0, sign = 0, slice = 0;
    for (const auto& r : report.rejected) {
      auto det = r.side == 'L' ? det_left(r.candidate.constant) : det_right(r.candidate.constant);
      if (det == r.determinant && verify_witness(det, r.witness)) ++verified;
      if (std::holds_alternative<SignChangeWitness>(r.witness)) ++sign; else ++slice;
    }
    slice_total += slice;
    check.require(verified == report.rejected.size(), std::string(c.label) + " witness verification");
    check.info(std::string(c.label) + ": " + std::to_string(verified) + "/" + std::to_string(report.rejected.size()) +
               " verified (" + std::to_string(sign) + " sign-change, " + std::to_string(slice) + " slice-root)");
  }
  std::string note;
  if (slice_total > 0)
    note = "slice-root witnesses stand in where det >= 0 has only irrational real zeros, so no sign change exists";
  return finish(check, note);
}

CriterionResult identity_dimensions(const AcceptanceOptions&) {
  Check check;
  CriterionResult out;
  auto tes = algebras::tesseranions();
  const std::vector<std::pair<std::string, std::size_t>> expected{{"2,1", 1}, {"4", 2},  {"2,2", 14},
                                                                  {"3,1", 9}, {"5", 9}, {"6", 34}};
  for (const auto& [pattern, dim] : expected) {
    auto t0 = Clock::now();
    auto space = identity_space(tes, DegreePattern::parse(pattern));
    double dt = seconds_since(t0);
    check.require(space.dimension() == dim, "(" + pattern + ") dimension " + std::to_string(space.dimension()));
    if (pattern == "6") check.require(dt < 120.0, "(6) runtime");
    check.info("(" + pattern + ") -> " + std::to_string(space.dimension()) + " of " +
               std::to_string(space.monomials.size()) + " monomials");
    out.timings.emplace_back("(" + pattern + ")", dt);
  }
  out.passed = check.ok();
  out.detail = check.detail();
  return out;
}

CriterionResult stated_identities(const AcceptanceOptions& opts) {
  Check check;
  auto tes = algebras::tesseranions();
  std::size_t held = 0;
  for (const auto& id : tesseranity_identities()) {
    bool ok = verify_expression_identity(tes, Identity::parse(id.label, id.text));
    check.require(ok, id.label);
    held += ok;
  }
  check.info(std::to_string(held) + "/" + std::to_string(tesseranity_identities().size()) + " numbered identities");
  std::size_t conj = 0;
  auto conj_checks = verify_conjugate_identities(tes);
  for (const auto& c : conj_checks) {
    check.require(c.holds, c.label + " (conjugate form)");
    conj += c.holds;
  }
  check.info(std::to_string(conj) + "/" + std::to_string(conj_checks.size()) + " conjugate identities");
  for (const auto& family : coefficient_families()) {
    auto fc = check_coefficient_family(tes, family, 20, static_cast<unsigned>(opts.seed));
    check.require(fc.ok(), family.label);
    check.info(family.label + ": " + std::to_string(fc.samples_verified) + "/20 samples, " +
               std::to_string(fc.free_coefficients) + " free = dim " + std::to_string(fc.space_dimension));
  }
  return finish(check);
}

CriterionResult cohomology(const AcceptanceOptions&) {
  Check check;
  namespace cf = closed_form;
  auto hc = quaternion_constant(), tc = tesseranion_constant();
  auto qh = q_function(hc), qt = q_function(tc);
  auto rh = r_function(hc), rt = r_function(tc);
  check.require(rh.is_trivial(), "r_H = 1");
  check.require(rh == cf::quaternion_r(), "r_H closed form");
  check.require(is_separable(qh), "q_H separable");
  check.require(is_2cocycle(qh), "q_H cocycle");
  check.require(is_coboundary_of(qh, cf::quaternion_kappa()), "kappa_H");
  check.require(rt == cf::tesseranion_r(), "r_T closed form");
  check.require(is_coboundary_of(qt, cf::tesseranion_kappa()), "kappa_T");
  check.require(constant_signs(hc) == cf::quaternion_constant() && qh == cf::quaternion_q(), "H tables");
  check.require(constant_signs(tc) == cf::tesseranion_constant() && qt == cf::tesseranion_q(), "T tables");
  auto violation = separability_violation(qt);
  check.require(violation.has_value(), "q_T not separable");
  check.require(r_matches_products(algebras::tesseranions(), rt) && q_matches_products(algebras::tesseranions(), qt),
                "r, q against products");
  if (violation) {
    auto [g, h, t] = *violation;
    check.info("q_T separability fails at (g,h,t) = (" + std::to_string(g) + "," + std::to_string(h) + "," +
               std::to_string(t) + ")");
  }
  return finish(check);
}

CriterionResult structure(const AcceptanceOptions&) {
  Check check;
  auto tes = algebras::tesseranions();
  auto lie = commutator_algebra(tes);
  auto jor = anticommutator_algebra(tes);
  check.require(jacobi_check(lie).holds, "Jacobi");
  auto derived = series(lie, SeriesKind::Derived).dimensions();
  check.require(derived == std::vector<std::size_t>{4, 3, 1, 0}, "derived series");
  auto lower = series(lie, SeriesKind::LowerCentral);
  check.require(lower.stabilized && !lower.reaches_zero && lower.terms.back().dimension() == 3, "lower central");
  check.require(heisenberg_ideal_check(lie), "Heisenberg ideal");
  check.require(flexible_check(jor).holds, "T+ flexible");
  check.require(!fourth_power_check(jor).holds, "T+ power associativity");
  auto jordan = jordan_check(jor);
  check.require(!jordan.holds, "Jordan fails");
  // (x1^2 + x3^2) [-(y1 x1 + y3 x3), x1 y2, 0, x3 y2]
  auto x = [&](std::size_t i) { return MultiPoly::variable(jordan.vars, "x" + std::to_string(i)); };
  auto y = [&](std::size_t i) { return MultiPoly::variable(jordan.vars, "y" + std::to_string(i)); };
  MultiPoly f = x(1) * x(1) + x(3) * x(3);
  SymbolicElement expected{-(f * (y(1) * x(1) + y(3) * x(3))), f * x(1) * y(2), MultiPoly(jordan.vars), f * x(3) * y(2)};
  bool residual_ok = jordan.residual.size() == 4;
  for (std::size_t i = 0; residual_ok && i < 4; ++i) residual_ok = jordan.residual[i] == expected[i];
  check.require(residual_ok, "Jordan residual");
  std::string dims;
  for (auto d : derived) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  check.info("derived [" + dims + "], lower central stabilizes at " + std::to_string(lower.terms.back().dimension()));
  return finish(check);
}

CriterionResult chirality(const AcceptanceOptions& opts) {
  Check check;
  auto tes = algebras::tesseranions();
  AlgebraElement w = tes.basis(1);
  AlgebraElement w3 = tes.product(w, tes.product(w, w));
  check.require(left_inverse(tes, w) == w3, "LI(w) = w^3");
  check.require(right_inverse(tes, w) == -w3, "RI(w) = -w^3");
  check.require(chiral_inverse_check(tes).kind == Chirality::Chiral, "T chiral");
  check.require(chiral_inverse_check(algebras::quaternions()).kind == Chirality::TwoSided, "H two-sided");
  check.require(chiral_inverse_check(algebras::complex()).kind == Chirality::TwoSided, "C two-sided");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::size_t agree = 0, tested = 0;
  while (tested < 100) {
    AlgebraElement z{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                     Rational(num(rng), den(rng))};
    for (auto& c : z.coeffs) c.canonicalize();
    if (z.is_zero()) continue;
    ++tested;
    auto [li, ri] = inverse_formulas(z);
    if (li == left_inverse(tes, z) && ri == right_inverse(tes, z) && tes.product(li, z) == tes.one() &&
        tes.product(z, ri) == tes.one())
      ++agree;
  }
  check.require(agree == 100, "formula inverses");
  check.info("LI(w) = " + w3.to_string() + ", RI(w) = " + (-w3).to_string() + "; formulas agree on " +
             std::to_string(agree) + "/100");
  return finish(check);
}

CriterionResult schwarz(const AcceptanceOptions& opts) {
  Check check;
  AlgebraElement p{1, 1, 0, 0}, q{1, -1, 0, 0}, s{1, 1, 1, 0}, t{1, -1, 1, 0};
  Rational pp = schwarz_defect4(p, p), pq = schwarz_defect4(p, q), st = schwarz_defect4(s, t);
  check.require(pp == -16 && pq == 0 && st == 8, "defects");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> d(-7, 7);
  std::size_t zero = 0;
  for (int i = 0; i < 100; ++i) {
    AlgebraElement x{d(rng), d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng), d(rng)};
    AlgebraElement& pure = (i % 2 == 0) ? x : y;
    if ((i / 2) % 2 == 0) {
      pure[1] = 0;
      pure[3] = 0;
    } else {
      pure[0] = 0;
      pure[2] = 0;
    }
    zero += schwarz_equality_pure(x, y) == 0;
  }
  check.require(zero == 100, "pure factors");
  check.require(quaternion_schwarz_symbolic(), "H Schwarz equality");
  check.info("|x|^4|y|^4 - |xy|^4: (p,p) " + to_string(pp) + ", (p,q) " + to_string(pq) + ", (s,t) " + to_string(st) +
             "; pure pairings " + std::to_string(zero) + "/100");
  return finish(check, "compared as fourth powers |x|^4|y|^4 - |x.y|^4");
}

CriterionResult iterated_norms(const AcceptanceOptions& opts) {
  Check check;
  std::size_t strict = 0, equal = 0, tight = 0;
  for (unsigned j = 1; j <= 4; ++j)
    for (std::size_t n = 1; n <= 3; ++n) {
      IteratedNormSpec spec{j, n};
      auto tri = triangle_check(spec, 10000, opts.seed + j * 10 + n);
      auto hom = positive_homogeneity_check(spec, 10000, opts.seed + j * 10 + n);
      std::string tag = "M_" + std::to_string(j) + " n=" + std::to_string(n);
      check.require(tri.holds(), tag + " triangle");
      check.require(hom.holds(), tag + " homogeneity");
      strict += tri.strict;
      equal += tri.equality;
      tight += tri.tight;
    }
  check.require(iterated_norm_matches_quartic(), "M_2 vs |x|^4");
  check.info("12 x 10^4 triangle samples: " + std::to_string(strict) + " strict, " + std::to_string(equal) +
             " proportional, " + std::to_string(tight) + " undecided");
  return finish(check);
}

CriterionResult non_isomorphism(const AcceptanceOptions& opts) {
  Check check;
  auto fh = non_isomorphism_fingerprint(algebras::quaternions());
  auto ft = non_isomorphism_fingerprint(algebras::tesseranions());
  check.require(fh.power_associative && !ft.power_associative, "power associativity separates H and T");
  auto raw = classify(FiniteGroup::make(GroupName::Z4), BasisConvention::LeftStandard, CandidateMode::Raw,
                      classify_options(opts));
  check.require(raw.survivors.size() == kPinnedRawZ4Survivors, "raw Z4 survivor count");
  check.require(raw.undetermined.empty(), "raw Z4 undetermined");
  std::size_t same = 0;
  for (const auto& s : raw.survivors) same += non_isomorphism_fingerprint(TwistedAlgebra(s.candidate.constant)) == ft;
  check.info("raw Z4: " + std::to_string(raw.survivors.size()) + " survivors of " +
             std::to_string(raw.candidates_examined) + " (pinned " + std::to_string(kPinnedRawZ4Survivors) + "), " +
             std::to_string(same) + " with the T fingerprint");
  return finish(check);
}

CriterionResult deformations(const AcceptanceOptions&) {
  Check check;
  std::size_t certified = 0, total = 0;
  for (int id = 1; id <= 8; ++id)
    for (const Rational& k : {Rational(2), Rational(3), Rational(4), Rational(1, 2)}) {
      ++total;
      auto p = family_constant(id, k);
      std::string tag = "T" + std::to_string(id) + "(" + to_string(k) + ")";
      check.require(family_valid(id, k), tag + " validity");
      check.require(neccons_check(p).passes, tag + " necessary conditions");
      check.require(!witness_search(p).has_value(), tag + " witness");
      certified += analyze_deformation(p).status == DeformationStatus::Certified;
    }
  auto probe = epsilon_probe();
  bool near_root = false;
  for (const auto& r : probe.roots) near_root |= r.lo * r.lo <= 2 && r.hi * r.hi >= 2 && r.lo > 0;
  check.require(probe.value_at_root_squared == 0 && near_root, "epsilon = -1 probe");
  check.require(witness_search(probe.parameters).has_value(), "epsilon = -1 witness");
  check.require(k_inverse_isomorphism(4).matches(), "k = 4 <-> 1/4");
  for (int k : {7, 49}) check.require(commutator_rescaling(k).matches(), "rescaling k = " + std::to_string(k));
  check.info(std::to_string(total) + " family samples pass the necessary conditions with no witness, " + std::to_string(certified) +
             " SOS-certified; det restricted to y0=y2=1,y3=0 is " + probe.restriction.to_string("y1"));
  return finish(check, "commutator rescaling uses v1' = u v1, v3' = u v3");
}

CriterionResult encryption(const AcceptanceOptions& opts) {
  Check check;
  check.require(cipher_identities_hold(), "conjugate identities");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> d(0, 256);
  std::size_t ok = 0, tested = 0, rejected = 0;
  while (tested < 1000) {
    RationalVector a{d(rng), d(rng), d(rng), d(rng)}, c{d(rng), d(rng), d(rng), d(rng)};
    if (ScalarRing::mod_p(257).reduce(quartic_norm4(AlgebraElement(a))) == 0) {
      ++rejected;
      bool threw = false;
      try {
        TesseranionCipher bad(257, a);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      check.require(threw, "singular random key rejected");
      continue;
    }
    ++tested;
    TesseranionCipher left(257, a);
    TesseranionCipher right(257, a, CipherSide::Right);
    ok += left.decrypt(left.encrypt(c)).coeffs == c && right.decrypt(right.encrypt(c)).coeffs == c;
  }
  check.require(ok == 1000, "round trips");
  auto rejects = [](long p, RationalVector key) {
    try {
      TesseranionCipher c(p, key);
    } catch (const std::invalid_argument&) {
      return true;
    }
    return false;
  };
  // 16^2 + 1 = 257
  check.require(rejects(257, {16, 0, 1, 0}), "|a|^4 = 0 mod 257 rejected");
  check.require(rejects(257, {0, 0, 0, 0}), "zero key rejected");
  check.require(rejects(2, {1, 0, 0, 0}), "p = 2 rejected");
  check.info(std::to_string(ok) + "/1000 round trips (left and right forms), " + std::to_string(rejected) +
             " random singular keys skipped");
  return finish(check);
}

CriterionResult equation_showcase(const AcceptanceOptions&) {
  Check check;
  auto tes = algebras::tesseranions();
  AlgebraElement w{0, 1, 0, 0};
  auto residual = evaluate_numeric(Expr::parse("(x*x^2 - x^2*x)*x - 2"), tes, {{"x", w}});
  check.require(residual.is_zero(), "(x.x^2 - x^2.x).x - 2 at w");
  auto commutator = evaluate_numeric(Expr::parse("x*x^2 - x^2*x"), tes, {{"x", w}});
  check.require(!commutator.is_zero(), "x.x^2 != x^2.x at w");
  check.info("residual " + residual.to_string() + ", x.x^2 - x^2.x = " + commutator.to_string());
  return finish(check);
}

using Runner = CriterionResult (*)(const AcceptanceOptions&);

const std::vector<std::pair<CriterionInfo, Runner>>& registry() {
  static const std::vector<std::pair<CriterionInfo, Runner>> list{
      {{1, "Classification uniqueness"}, classification_uniqueness},
      {{2, "Survivor certificates"}, survivor_certificates},
      {{3, "Rejection completeness"}, rejection_completeness},
      {{4, "Identity-space dimensions"}, identity_dimensions},
      {{5, "Stated identities"}, stated_identities},
      {{6, "Cohomology"}, cohomology},
      {{7, "Structure analysis"}, structure},
      {{8, "Chirality"}, chirality},
      {{9, "Schwarz numbers"}, schwarz},
      {{10, "Iterated norms"}, iterated_norms},
      {{11, "Non-isomorphism"}, non_isomorphism},
      {{12, "Deformations"}, deformations},
      {{13, "Encryption"}, encryption},
      {{14, "Equation solving"}, equation_showcase},
  };
  return list;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> out;
    for (const auto& [info, fn] : registry()) out.push_back(info);
    return out;
  }();
  return infos;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  for (const auto& [info, fn] : registry()) {
    if (info.id != id) continue;
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = fn(options);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = info.id;
    r.title = info.title;
    r.seconds = seconds_since(t0);
    return r;
  }
  throw std::out_of_range("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty()) {
    for (const auto& info : criteria()) out.push_back(run_criterion(info.id, options));
  } else {
    for (int id : ids) out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_line(const CriterionResult& r, bool timings) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << ": " << r.detail;
  if (!r.note.empty()) os << " (note: " << r.note << ")";
  if (timings) {
    os << " [" << fmt_seconds(r.seconds);
    for (const auto& [label, t] : r.timings) os << "; " << label << " " << fmt_seconds(t);
    os << "]";
  }
  return os.str();
}

Json to_json(const std::vector<CriterionResult>& results, bool timings) {
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    Json j{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
    if (!r.note.empty()) j["note"] = r.note;
    if (timings) {
      Json t{{"total", r.seconds}};
      for (const auto& [label, s] : r.timings) t[label] = s;
      j["seconds"] = t;
    }
    arr.push_back(std::move(j));
  }
  return Json{{"criteria", arr}, {"passed", passed}, {"total", results.size()}};
}

}  // namespace tessera::cli
