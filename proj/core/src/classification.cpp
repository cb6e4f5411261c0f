#include "tessera/classification.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "tessera/determinant.hpp"
#include "tessera/identities.hpp"
#include "tessera/parallel.hpp"

namespace tessera {

std::string_view mode_string(CandidateMode mode) { return mode == CandidateMode::Shaped ? "shaped" : "raw"; }

CandidateMode parse_mode(std::string_view text) {
  if (text == "shaped") return CandidateMode::Shaped;
  if (text == "raw") return CandidateMode::Raw;
  throw std::invalid_argument("unknown candidate mode: " + std::string(text));
}

std::string Candidate::parameter_string() const {
  std::string out;
  for (const auto& [name, v] : parameters) {
    if (!out.empty()) out += ", ";
    out += name + "=" + std::to_string(v);
  }
  return out;
}

namespace {

int sign_at(std::size_t code, std::size_t index, std::size_t count) {
  return ((code >> (count - 1 - index)) & 1U) ? -1 : 1;
}

StructureConstant with_convention(const StructureConstant& c, BasisConvention convention) {
  return c.convention() == convention ? c : c.transposed();
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const FiniteGroup& group, BasisConvention convention, CandidateMode mode) {
  const int n = group.order();
  std::vector<Candidate> out;
  if (n == 1) {
    out.push_back({StructureConstant::from_rows(group, {{1}}, convention), {}});
    return out;
  }
  if (n != 2 && n != 4) throw std::invalid_argument("candidate enumeration supports groups of order 1, 2 and 4");

  if (mode == CandidateMode::Raw || group.name() == GroupName::Z2) {
    const std::size_t free = static_cast<std::size_t>((n - 1) * (n - 1));
    for (std::size_t code = 0; code < (std::size_t{1} << free); ++code) {
      std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 1));
      Candidate cand{StructureConstant::from_rows(group, rows, convention), {}};
      std::size_t k = 0;
      for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b, ++k) {
          int s = sign_at(code, k, free);
          rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
          std::string name = n == 2 ? "alpha" : "C(" + std::to_string(a) + "," + std::to_string(b) + ")";
          cand.parameters.emplace_back(name, s);
        }
      cand.constant = StructureConstant::from_rows(group, rows, convention);
      out.push_back(std::move(cand));
    }
    return out;
  }

  if (group.name() == GroupName::Z4) {
    static const std::vector<std::string> kNames{"alpha", "beta", "delta", "epsilon", "phi", "omega"};
    for (std::size_t code = 0; code < 64; ++code) {
      std::vector<int> s;
      for (std::size_t i = 0; i < 6; ++i) s.push_back(sign_at(code, i, 6));
      Candidate cand{with_convention(z4_shape(s[0], s[1], s[2], s[3], s[4], s[5]), convention), {}};
      for (std::size_t i = 0; i < 6; ++i) cand.parameters.emplace_back(kNames[i], s[i]);
      out.push_back(std::move(cand));
    }
    return out;
  }
  if (group.name() == GroupName::Z2xZ2) {
    static const std::vector<std::string> kNames{"alpha", "beta", "delta", "epsilon", "phi"};
    for (std::size_t code = 0; code < 32; ++code) {
      std::vector<int> s;
      for (std::size_t i = 0; i < 5; ++i) s.push_back(sign_at(code, i, 5));
      Candidate cand{with_convention(klein_shape(s[0], s[1], s[2], s[3], s[4]), convention), {}};
      for (std::size_t i = 0; i < 5; ++i) cand.parameters.emplace_back(kNames[i], s[i]);
      out.push_back(std::move(cand));
    }
    return out;
  }
  throw std::invalid_argument("unsupported grading group for candidate enumeration");
}

namespace {

using Outcome = std::variant<SurvivingCandidate, RejectedCandidate, UndeterminedCandidate>;

std::optional<SosCertificate> definite_certificate(const MultiPoly& p) {
  auto cert = find_sos(p);
  if (cert && certificate_is_definite(*cert, p.nvars())) return cert;
  return std::nullopt;
}

Outcome examine(const Candidate& cand, const GridSpec& grid) {
  MultiPoly dl = det_left(cand.constant);
  MultiPoly dr = det_right(cand.constant);
  if (cand.constant.order() == 1) return SurvivingCandidate{cand, dl, dr, std::nullopt, std::nullopt};
  auto cl = definite_certificate(dl);
  std::optional<SosCertificate> cr;
  if (cl) cr = dr == dl ? cl : definite_certificate(dr);
  if (cl && cr) return SurvivingCandidate{cand, dl, dr, cl, cr};
  if (auto w = find_zero_witness(dl, grid)) return RejectedCandidate{cand, 'L', dl, *w};
  if (auto w = find_zero_witness(dr, grid)) return RejectedCandidate{cand, 'R', dr, *w};
  return UndeterminedCandidate{cand, dl, dr};
}

}  // namespace

ClassificationReport classify(const FiniteGroup& group, BasisConvention convention, CandidateMode mode,
                              const ClassifyOptions& options) {
  auto candidates = enumerate_candidates(group, convention, mode);
  std::vector<std::optional<Outcome>> outcomes(candidates.size());
  parallel_for(
      candidates.size(), [&](std::size_t i) { outcomes[i] = examine(candidates[i], options.grid); },
      options.threads == 0 ? thread_count() : options.threads);
  ClassificationReport report{group, convention, mode, candidates.size(), {}, {}, {}};
  for (auto& o : outcomes) {
    if (auto* s = std::get_if<SurvivingCandidate>(&*o)) report.survivors.push_back(std::move(*s));
    else if (auto* r = std::get_if<RejectedCandidate>(&*o)) report.rejected.push_back(std::move(*r));
    else report.undetermined.push_back(std::get<UndeterminedCandidate>(std::move(*o)));
  }
  return report;
}

bool verify_report(const ClassificationReport& report) {
  if (report.rejected.size() + report.survivors.size() + report.undetermined.size() != report.candidates_examined)
    return false;
  for (const auto& r : report.rejected) {
    MultiPoly d = r.side == 'L' ? det_left(r.candidate.constant) : det_right(r.candidate.constant);
    if (d != r.determinant || !verify_witness(d, r.witness)) return false;
  }
  for (const auto& s : report.survivors) {
    if (s.det_left != det_left(s.candidate.constant) || s.det_right != det_right(s.candidate.constant)) return false;
    if (s.candidate.constant.order() == 1) continue;
    if (!s.cert_left || !s.cert_right) return false;
    if (!verify_sos(s.det_left, *s.cert_left) || !certificate_is_definite(*s.cert_left, s.det_left.nvars())) return false;
    if (!verify_sos(s.det_right, *s.cert_right) || !certificate_is_definite(*s.cert_right, s.det_right.nvars()))
      return false;
  }
  return true;
}

bool opposite_uniqueness_check(const FiniteGroup& group, BasisConvention convention) {
  BasisConvention mirrored =
      convention == BasisConvention::LeftStandard ? BasisConvention::RightStandard : BasisConvention::LeftStandard;
  auto primary = classify(group, convention, CandidateMode::Shaped);
  auto other = classify(group, mirrored, CandidateMode::Shaped);
  if (primary.survivors.size() != 1 || other.survivors.size() != 1) return false;
  return other.survivors[0].candidate.constant.values() == primary.survivors[0].candidate.constant.values().transposed();
}

Fingerprint non_isomorphism_fingerprint(const TwistedAlgebra& algebra) {
  Fingerprint f;
  auto suite = loop_property_suite(algebra);
  f.commutative = suite.holds("commutative");
  f.flexible = suite.holds("flexible");
  f.power_associative = suite.holds("power_associative");
  for (const char* p : {"2,1", "4", "2,2", "3,1"})
    f.identity_dimensions[p] = identity_space(algebra, DegreePattern::parse(p)).dimension();
  return f;
}

std::optional<AlgebraElement> power_associativity_witness(const TwistedAlgebra& algebra) {
  auto ce = find_counterexample(algebra, Identity::parse("third power", "x*x^2 = x^2*x"));
  if (!ce) return std::nullopt;
  return ce->front();
}

OddOrderWitness odd_order_zero_divisor(const FiniteGroup& group, const StructureConstant& c) {
  int n = group.order();
  int p = 0;
  for (int d = 3; d <= n; d += 2)
    if (n % d == 0 && is_prime(d)) {
      p = d;
      break;
    }
  if (p == 0) throw std::invalid_argument("group order is a power of two");
  auto sub = group.cyclic_subgroup_of_order(p);
  if (!sub) throw std::logic_error("no cyclic subgroup of the odd prime order");
  const auto& h = *sub;
  auto vars = make_vars(std::vector<std::string>{"ye"});
  PolyMatrix m(h.size(), h.size(), MultiPoly(vars));
  for (std::size_t ci = 0; ci < h.size(); ++ci)
    for (std::size_t ai = 0; ai < h.size(); ++ai) {
      int a = h[ai];
      int b = group.mul(group.inverse(a), h[ci]);
      MultiPoly yb = b == 0 ? MultiPoly::variable(vars, 0) : MultiPoly(vars, Rational(1));
      m(ci, ai) = yb * c(a, b);
    }
  OddOrderWitness w;
  w.prime = p;
  w.subgroup = h;
  w.determinant = UniPoly::from_multi(symbolic_det(m));
  auto roots = isolate_real_roots(w.determinant);
  if (roots.empty()) throw std::logic_error("odd-degree determinant without a real root");
  w.root = roots.front();
  return w;
}

bool random_nonsingularity_check(const StructureConstant& c, std::size_t samples, unsigned seed) {
  TwistedAlgebra a(c);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (std::size_t s = 0; s < samples; ++s) {
    RationalVector y(static_cast<std::size_t>(a.dim()));
    do {
      for (auto& v : y) v = dist(rng);
    } while (is_zero(y));
    if (determinant(a.left_matrix(a.element(y))) == 0) return false;
  }
  return true;
}

std::vector<std::string> element_labels(const FiniteGroup& group) {
  std::vector<std::string> out;
  if (group.name() == GroupName::Z2xZ2) return {"(0,0)", "(1,0)", "(0,1)", "(1,1)"};
  for (int i = 0; i < group.order(); ++i) out.push_back(std::to_string(i));
  return out;
}

std::string constant_markdown(const StructureConstant& c) {
  auto labels = element_labels(c.group());
  const auto n = labels.size();
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"C"});
  for (const auto& l : labels) cells[0].push_back(l);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::string> row{labels[r]};
    for (std::size_t col = 0; col < n; ++col) row.push_back(to_string(c(static_cast<int>(r), static_cast<int>(col))));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& row) {
    std::string s = "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = row[i];
      if (i == 0) cell += std::string(width[i] - cell.size(), ' ');
      else cell = std::string(width[i] - cell.size(), ' ') + cell;
      s += " " + cell + " |";
    }
    return s + "\n";
  };
  std::string out = line(cells[0]);
  out += "|";
  for (std::size_t i = 0; i <= n; ++i) out += (i == 0 ? std::string(width[i] + 2, '-') : std::string(width[i] + 1, '-') + ":") + "|";
  out += "\n";
  for (std::size_t r = 1; r < cells.size(); ++r) out += line(cells[r]);
  return out;
}

namespace {

Json candidate_json(const Candidate& c) {
  Json j;
  Json params = Json::object();
  for (const auto& [name, v] : c.parameters) params[name] = v;
  j["parameters"] = params;
  j["C"] = matrix_to_json(c.constant.values());
  return j;
}

Json certificate_json(const std::optional<SosCertificate>& cert) {
  if (!cert) return nullptr;
  Json terms = Json::array();
  for (const auto& t : cert->terms) terms.push_back({{"coef", rational_to_json(t.coef)}, {"base", t.base.to_string()}});
  return terms;
}

}  // namespace

Json report_to_json(const ClassificationReport& report) {
  Json j;
  j["group"] = report.group.label();
  j["basis"] = std::string(convention_string(report.convention));
  j["mode"] = std::string(mode_string(report.mode));
  j["candidates_examined"] = report.candidates_examined;
  j["survivor_count"] = report.survivors.size();
  j["rejected_count"] = report.rejected.size();
  j["undetermined_count"] = report.undetermined.size();
  Json survivors = Json::array();
  for (const auto& s : report.survivors) {
    Json e = candidate_json(s.candidate);
    e["det_left"] = s.det_left.to_string();
    e["det_right"] = s.det_right.to_string();
    e["certificate_left"] = certificate_json(s.cert_left);
    e["certificate_right"] = certificate_json(s.cert_right);
    survivors.push_back(std::move(e));
  }
  j["survivors"] = survivors;
  Json rejected = Json::array();
  for (const auto& r : report.rejected) {
    Json e = candidate_json(r.candidate);
    e["side"] = std::string(1, r.side);
    e["determinant"] = r.determinant.to_string();
    e["witness"] = witness_to_json(r.witness);
    rejected.push_back(std::move(e));
  }
  j["rejected"] = rejected;
  Json undetermined = Json::array();
  for (const auto& u : report.undetermined) {
    Json e = candidate_json(u.candidate);
    e["det_left"] = u.det_left.to_string();
    e["det_right"] = u.det_right.to_string();
    undetermined.push_back(std::move(e));
  }
  j["undetermined"] = undetermined;
  return j;
}

std::string report_to_markdown(const ClassificationReport& report) {
  std::ostringstream out;
  out << "## " << report.group.label() << ", " << convention_string(report.convention) << " basis, "
      << mode_string(report.mode) << " candidates\n\n";
  out << "- candidates examined: " << report.candidates_examined << "\n";
  out << "- survivors: " << report.survivors.size() << "\n";
  out << "- rejected: " << report.rejected.size() << "\n";
  out << "- undetermined: " << report.undetermined.size() << "\n";
  std::size_t sign_changes = 0;
  for (const auto& r : report.rejected)
    if (std::holds_alternative<SignChangeWitness>(r.witness)) ++sign_changes;
  out << "- witnesses: " << sign_changes << " sign-change, " << report.rejected.size() - sign_changes
      << " slice-root\n";
  for (std::size_t i = 0; i < report.survivors.size(); ++i) {
    const auto& s = report.survivors[i];
    out << "\n### Survivor " << i + 1;
    if (!s.candidate.parameters.empty() && report.mode == CandidateMode::Shaped)
      out << " (" << s.candidate.parameter_string() << ")";
    out << "\n\n" << constant_markdown(s.candidate.constant) << "\n";
    out << "det M^L = " << s.det_left.to_string() << "\n\n";
    out << "det M^R = " << s.det_right.to_string() << "\n";
    if (s.cert_left) out << "\nSOS (left): " << s.cert_left->to_string() << "\n";
    if (s.cert_right) out << "\nSOS (right): " << s.cert_right->to_string() << "\n";
  }
  for (const auto& u : report.undetermined) {
    out << "\n### Undetermined (" << u.candidate.parameter_string() << ")\n\n" << constant_markdown(u.candidate.constant);
  }
  return out.str();
}

}  // namespace tessera
