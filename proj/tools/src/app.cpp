#include "tessera/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tessera/classification.hpp"
#include "tessera/cli/acceptance.hpp"
#include "tessera/cohomology.hpp"
#include "tessera/deformations.hpp"
#include "tessera/determinant.hpp"
#include "tessera/identities.hpp"
#include "tessera/norms.hpp"
#include "tessera/parallel.hpp"
#include "tessera/structure.hpp"

namespace tessera::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "md";
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

// Result of a subcommand: a JSON document, an optional hand-written markdown
// rendering, and whether every requested check passed.
struct Outcome {
  Json json;
  std::string markdown;
  bool ok = true;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool wants(const std::vector<std::string>& items, const std::string& name) {
  return std::find(items.begin(), items.end(), name) != items.end() ||
         std::find(items.begin(), items.end(), "all") != items.end();
}

void require_known(const std::vector<std::string>& items, const std::vector<std::string>& known,
                   const std::string& option) {
  for (const auto& i : items)
    if (i != "all" && std::find(known.begin(), known.end(), i) == known.end())
      throw UsageError("unknown value '" + i + "' for " + option);
}

RationalVector parse_vector(const std::string& text) {
  RationalVector v;
  for (const auto& part : split(text)) v.push_back(parse_rational(part));
  return v;
}

TwistedAlgebra select_algebra(const std::string& selector) {
  if (std::filesystem::exists(selector)) {
    try {
      return load_algebra_file(selector);
    } catch (const std::exception& e) {
      throw UsageError("malformed algebra file " + selector + ": " + e.what());
    }
  }
  try {
    return algebras::by_name(selector);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown algebra '" + selector + "' (tes, quat, complex, real or a JSON file)");
  }
}

// Generic markdown: scalars become bullets, nested objects become headed sections.
void render(const Json& j, std::ostream& os, int depth) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << "\n" << std::string(static_cast<std::size_t>(std::min(depth + 2, 6)), '#') << " " << key << "\n\n";
      render(value, os, depth + 1);
    } else if (value.is_array()) {
      bool scalars = std::all_of(value.begin(), value.end(), [](const Json& e) { return e.is_primitive(); });
      if (scalars) {
        os << "- " << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i)
          os << (i ? ", " : "") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
        os << "]\n";
      } else {
        os << "\n" << std::string(static_cast<std::size_t>(std::min(depth + 2, 6)), '#') << " " << key << "\n\n";
        for (const auto& e : value) os << "- " << e.dump() << "\n";
      }
    } else if (value.is_string()) {
      const auto& s = value.get_ref<const std::string&>();
      if (s.find('\n') != std::string::npos)
        os << "\n" << s << "\n";
      else
        os << "- " << key << ": " << s << "\n";
    } else {
      os << "- " << key << ": " << value.dump() << "\n";
    }
  }
}

std::string to_markdown(const Json& j) {
  std::ostringstream os;
  render(j, os, 0);
  return os.str();
}

std::string sign_table(const SignFunction2& f) {
  auto labels = element_labels(f.group());
  std::size_t width = 2;
  for (const auto& l : labels) width = std::max(width, l.size());
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  std::ostringstream os;
  os << "| " << pad("") << " |";
  for (const auto& l : labels) os << " " << pad(l) << " |";
  os << "\n|" << std::string(width + 2, '-') << "|";
  for (std::size_t i = 0; i < labels.size(); ++i) os << std::string(width + 1, '-') << ":|";
  os << "\n";
  int n = f.group().order();
  for (int a = 0; a < n; ++a) {
    os << "| " << pad(labels[static_cast<std::size_t>(a)]) << " |";
    for (int b = 0; b < n; ++b) os << " " << pad(std::to_string(f(a, b))) << " |";
    os << "\n";
  }
  return os.str();
}

Json sign_json(const SignFunction2& f) {
  Json rows = Json::array();
  int n = f.group().order();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(f(a, b));
    rows.push_back(row);
  }
  return rows;
}

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

Json element_json(const AlgebraElement& x) { return x.to_string(); }

// ---- classify -------------------------------------------------------------

Outcome cmd_classify(const Globals& g, const std::string& group, const std::string& basis, const std::string& mode,
                     int grid) {
  ClassifyOptions opts;
  opts.threads = g.threads;
  if (grid > 0) opts.grid.bound = grid;
  auto report = classify(FiniteGroup::make(parse_group_name(group)), parse_convention(basis), parse_mode(mode), opts);
  return {report_to_json(report), report_to_markdown(report), report.undetermined.empty()};
}

// ---- cohomology -----------------------------------------------------------

Outcome cmd_cohomology(const std::string& selector, const std::vector<std::string>& show,
                       const std::vector<std::string>& checks) {
  auto algebra = select_algebra(selector);
  const auto& c = algebra.constant();
  if (!c.is_sign_valued() || !c.is_unital()) throw UsageError("cohomology needs a unital sign-valued constant");
  Outcome o;
  std::ostringstream md;
  md << "## Cohomology of " << (algebra.name().empty() ? selector : algebra.name()) << "\n";
  auto r = r_function(c);
  std::optional<SignFunction2> q;
  if (c.group().is_abelian()) q = q_function(c);

  if (wants(show, "C")) {
    auto s = constant_signs(c);
    o.json["C"] = sign_json(s);
    md << "\n### C\n\n" << sign_table(s);
  }
  if (wants(show, "q") && q) {
    o.json["q"] = sign_json(*q);
    md << "\n### q\n\n" << sign_table(*q);
  }
  if (wants(show, "r")) {
    Json minus = Json::array();
    int n = c.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int t = 0; t < n; ++t)
          if (r(a, b, t) == -1) minus.push_back(Json::array({a, b, t}));
    o.json["r_minus_one"] = minus;
    md << "\n### r\n\nr(a,b,c) = -1 on " << minus.size() << " of " << n * n * n << " triples";
    if (r.is_trivial()) md << " (associative)";
    md << "\n";
    for (const auto& t : minus) md << "- " << t.dump() << "\n";
  }
  if (wants(show, "kappa") && q) {
    auto kappa = find_coboundary_kappa(*q);
    if (kappa) {
      o.json["kappa"] = kappa->values();
      md << "\n### kappa\n\nq = d kappa with kappa = " << Json(kappa->values()).dump() << "\n";
    } else {
      o.json["kappa"] = nullptr;
      md << "\n### kappa\n\nq is not a coboundary\n";
    }
  }

  Json results;
  auto record = [&](const std::string& name, bool holds, std::optional<Triple> where = std::nullopt) {
    Json e{{"holds", holds}};
    if (where) e["violation"] = triple_json(*where);
    results[name] = e;
    md << "- " << name << ": " << (holds ? "holds" : "fails");
    if (where) md << " at " << triple_json(*where).dump();
    md << "\n";
  };
  if (!checks.empty()) md << "\n### Checks\n\n";
  if (wants(checks, "cocycle") && q) record("cocycle", is_2cocycle(*q), cocycle_violation(*q));
  if (wants(checks, "separable") && q) record("separable", is_separable(*q), separability_violation(*q));
  if (wants(checks, "reversal")) record("reversal", reversal_identity(r));
  if (wants(checks, "cyclic")) record("cyclic", cyclic_identity(r));
  if (wants(checks, "products")) {
    bool ok = r_matches_products(algebra, r) && (!q || q_matches_products(algebra, *q));
    record("products", ok);
    o.ok = ok;
  }
  if (!results.empty()) o.json["checks"] = results;
  o.markdown = md.str();
  return o;
}

// ---- identities -----------------------------------------------------------

std::string combination_string(const IdentitySpace& space, const RationalVector& v) {
  auto names = space.pattern.names();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != 1) out += to_string(c) + " ";
    out += space.monomials[i].serialize(names);
  }
  return out;
}

Outcome cmd_identities(const std::string& selector, const std::string& pattern, const std::string& emit) {
  auto algebra = select_algebra(selector);
  auto p = DegreePattern::parse(pattern);
  if (p.total() > kMaxIdentityDegree || p.nvars() > kMaxIdentityVariables)
    throw UsageError("pattern exceeds degree " + std::to_string(kMaxIdentityDegree) + " or " +
                     std::to_string(kMaxIdentityVariables) + " variables");
  auto space = identity_space(algebra, p);
  Outcome o;
  o.json["pattern"] = p.to_string();
  o.json["monomials"] = space.monomials.size();
  o.json["dimension"] = space.dimension();
  std::ostringstream md;
  md << "## Identities of degree pattern (" << p.to_string() << ")\n\n"
     << "- monomials: " << space.monomials.size() << "\n- dimension: " << space.dimension() << "\n";
  auto names = p.names();
  if (emit == "monomials") {
    Json list = Json::array();
    md << "\n";
    for (std::size_t i = 0; i < space.monomials.size(); ++i) {
      list.push_back(space.monomials[i].serialize(names));
      md << i << ". " << space.monomials[i].serialize(names) << "\n";
    }
    o.json["monomial_list"] = list;
  } else if (emit == "basis") {
    Json list = Json::array();
    md << "\n";
    for (const auto& v : space.basis) {
      auto s = combination_string(space, v);
      list.push_back(s);
      md << "- " << s << " = 0\n";
    }
    o.json["basis"] = list;
  } else if (emit != "dim") {
    throw UsageError("--emit must be dim, basis or monomials");
  }
  o.markdown = md.str();
  return o;
}

// ---- analyze --------------------------------------------------------------

Json vectors_json(const std::vector<RationalVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_string(v));
  return a;
}

Outcome cmd_analyze(const std::string& selector, const std::vector<std::string>& reports) {
  auto algebra = select_algebra(selector);
  Outcome o;
  auto lie = commutator_algebra(algebra);
  auto jor = anticommutator_algebra(algebra);
  if (wants(reports, "lie")) {
    auto jac = jacobi_check(lie);
    Json j{{"antisymmetric", lie.is_antisymmetric()}, {"jacobi", jac.holds}, {"abelian", lie.is_zero()}};
    if (!jac.holds) j["counterexample"] = vectors_json(jac.counterexample);
    o.json["lie"] = j;
  }
  if (wants(reports, "jordan")) {
    auto jc = jordan_check(jor);
    Json j{{"jordan", jc.holds}, {"flexible", flexible_check(jor).holds},
           {"fourth_power_associative", fourth_power_check(jor).holds}, {"alternative", alternative_check(jor).holds}};
    if (!jc.holds) {
      Json res = Json::array();
      for (const auto& comp : jc.residual) res.push_back(comp.to_string());
      j["residual"] = res;
    }
    o.json["jordan"] = j;
  }
  if (wants(reports, "series")) {
    auto d = series(lie, SeriesKind::Derived);
    auto l = series(lie, SeriesKind::LowerCentral);
    o.json["series"] = Json{{"derived", d.dimensions()},
                            {"solvable", d.reaches_zero},
                            {"lower_central", l.dimensions()},
                            {"nilpotent", l.reaches_zero},
                            {"heisenberg_ideal", heisenberg_ideal_check(lie)}};
  }
  if (wants(reports, "inverses")) {
    auto ch = chiral_inverse_check(algebra);
    Json j{{"kind", ch.kind == Chirality::Chiral ? "chiral" : "two-sided"}};
    if (ch.witness) j["witness"] = element_json(*ch.witness);
    if (ch.left_inverse) j["left_inverse"] = element_json(*ch.left_inverse);
    if (ch.right_inverse) j["right_inverse"] = element_json(*ch.right_inverse);
    o.json["inverses"] = j;
  }
  return o;
}

// ---- norms ----------------------------------------------------------------

Outcome cmd_norms(const Globals& g, const std::vector<std::string>& checks, std::size_t samples) {
  Outcome o;
  auto note = [&](const std::string& name, Json value, bool ok) {
    o.json[name] = std::move(value);
    o.ok = o.ok && ok;
  };
  if (wants(checks, "quartic")) {
    bool agree = quartic_norm_expressions_agree();
    note("quartic", Json{{"expressions", quartic_norm_expressions()}, {"agree", agree}}, agree);
  }
  if (wants(checks, "schwarz")) {
    AlgebraElement p{1, 1, 0, 0}, q{1, -1, 0, 0}, s{1, 1, 1, 0}, t{1, -1, 1, 0};
    bool h = quaternion_schwarz_symbolic();
    note("schwarz",
         Json{{"(p,p)", to_string(schwarz_defect4(p, p))},
              {"(p,q)", to_string(schwarz_defect4(p, q))},
              {"(s,t)", to_string(schwarz_defect4(s, t))},
              {"quaternion_equality", h}},
         h);
  }
  auto property = [&](const std::string& name, auto fn) {
    Json rows = Json::array();
    bool ok = true;
    for (unsigned j = 1; j <= 4; ++j)
      for (std::size_t n = 1; n <= 3; ++n) {
        auto rep = fn(IteratedNormSpec{j, n}, samples, g.seed + j * 10 + n);
        ok = ok && rep.holds();
        Json row{{"j", j}, {"n", n}, {"samples", rep.samples}, {"strict", rep.strict},
                 {"equality", rep.equality}, {"tight", rep.tight}, {"violations", rep.violations}};
        if (rep.counterexample)
          row["counterexample"] = {to_string(rep.counterexample->first), to_string(rep.counterexample->second)};
        rows.push_back(row);
      }
    note(name, rows, ok);
  };
  if (wants(checks, "triangle"))
    property("triangle", [](const IteratedNormSpec& s, std::size_t n, std::uint64_t seed) {
      return triangle_check(s, n, seed);
    });
  if (wants(checks, "homogeneity"))
    property("homogeneity", [](const IteratedNormSpec& s, std::size_t n, std::uint64_t seed) {
      return positive_homogeneity_check(s, n, seed);
    });
  if (wants(checks, "m2")) {
    bool ok = iterated_norm_matches_quartic();
    note("m2_equals_quartic", ok, ok);
  }
  if (wants(checks, "conjugates")) {
    bool ok = conjugate_product_identity() && pure_even_associativity() && cipher_identities_hold();
    note("conjugate_identities", ok, ok);
  }
  return o;
}

// ---- deform ---------------------------------------------------------------

Outcome cmd_deform(int family, const std::string& k_text, const std::vector<std::string>& checks) {
  Rational k = parse_rational(k_text);
  if (family < 1 || family > static_cast<int>(families().size()))
    throw UsageError("--family must lie in 1.." + std::to_string(families().size()));
  if (k == 0) throw UsageError("--k must be nonzero");
  const auto& spec = families()[static_cast<std::size_t>(family - 1)];
  auto p = family_constant(family, k);
  Outcome o;
  o.json["family"] = spec.name;
  o.json["k"] = to_string(k);
  o.json["parameters"] = p.to_string();
  o.json["valid"] = family_valid(family, k);
  o.json["validity"] = spec.validity;
  if (wants(checks, "neccons")) {
    auto nc = neccons_check(p);
    o.json["neccons"] = Json{{"passes", nc.passes}, {"violated", nc.violated}};
  }
  if (wants(checks, "det")) o.json["det_left"] = det_left(p.constant()).to_string();
  if (wants(checks, "witness")) {
    auto rep = analyze_deformation(p);
    Json j{{"status", status_string(rep.status)}};
    if (rep.left.certificate) j["sos_left"] = rep.left.certificate->to_string();
    if (rep.right.certificate) j["sos_right"] = rep.right.certificate->to_string();
    if (rep.left.witness) j["witness"] = describe(*rep.left.witness);
    else if (rep.right.witness) j["witness"] = describe(*rep.right.witness);
    o.json["analysis"] = j;
  }
  if (wants(checks, "inverse-iso")) {
    if (family != 1) throw UsageError("the k <-> 1/k isomorphism applies to family 1");
    auto inv = k_inverse_isomorphism(k);
    o.json["k_inverse"] = Json{{"s", to_string(inv.s)}, {"generator", element_json(inv.generator)},
                               {"matches", inv.matches()}};
    o.ok = inv.matches();
  }
  if (wants(checks, "commutator")) {
    if (family != 1) throw UsageError("the commutator rescaling applies to family 1");
    auto r = commutator_rescaling(k);
    Json j{{"u", r.u ? Json(to_string(*r.u)) : Json(nullptr)},
           {"v1_v2", r.v1_v2_matches},
           {"v1_v3", r.v1_v3_matches}};
    o.json["rescaling"] = j;
  }
  return o;
}

// ---- encrypt --------------------------------------------------------------

Outcome cmd_encrypt(long p, const std::string& key, const std::string& msg, const std::string& side, bool decrypt) {
  CipherSide s;
  if (side == "left") s = CipherSide::Left;
  else if (side == "right") s = CipherSide::Right;
  else throw UsageError("--side must be left or right");
  auto k = parse_vector(key), m = parse_vector(msg);
  if (k.size() != 4 || m.size() != 4) throw UsageError("--key and --msg take four comma-separated integers");
  std::optional<TesseranionCipher> cipher;
  try {
    cipher.emplace(p, k, s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Outcome o;
  o.json["p"] = p;
  o.json["side"] = side;
  if (decrypt) {
    auto plain = cipher->decrypt(cipher->algebra().element(m));
    o.json["plaintext"] = plain.to_string();
  } else {
    auto c = cipher->encrypt(m);
    o.json["ciphertext"] = c.to_string();
    auto back = cipher->decrypt(c);
    o.json["round_trip"] = back == cipher->algebra().element(m);
    o.ok = o.json["round_trip"].get<bool>();
  }
  return o;
}

// ---- accept ---------------------------------------------------------------

Outcome cmd_accept(const Globals& g, const std::vector<int>& ids, bool timings, std::ostream& out, bool stream) {
  AcceptanceOptions opts;
  opts.seed = g.seed;
  opts.threads = g.threads;
  std::vector<int> todo = ids;
  if (todo.empty())
    for (const auto& c : criteria()) todo.push_back(c.id);
  std::vector<CriterionResult> results;
  Outcome o;
  for (int id : todo) {
    try {
      results.push_back(run_criterion(id, opts));
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
    if (stream) out << format_line(results.back(), timings) << std::endl;
    o.ok = o.ok && results.back().passed;
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  if (stream) out << passed << "/" << results.size() << " criteria passed\n";
  o.json = to_json(results, timings);
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for +-1 twisted group algebras", "tessera"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"md", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--threads", g.threads, "Worker threads (default: TESSERA_THREADS or all cores)");

  std::function<Outcome()> action;
  bool streams = false;

  auto* classify_cmd = app.add_subcommand("classify", "Enumerate and classify sign-valued structure constants");
  std::string group = "Z4", basis = "left-standard", mode = "shaped";
  int grid = 0;
  classify_cmd->add_option("--group", group, "Z2, Z4, Z2xZ2, ...");
  classify_cmd->add_option("--basis", basis, "left-standard or right-standard");
  classify_cmd->add_option("--mode", mode, "shaped or raw");
  classify_cmd->add_option("--grid", grid, "Witness grid bound");
  classify_cmd->callback([&] { action = [&] { return cmd_classify(g, group, basis, mode, grid); }; });

  auto* coh = app.add_subcommand("cohomology", "Sign functions C, q, r and kappa");
  std::string algebra = "tes", show = "C,q,r,kappa", coh_checks;
  coh->add_option("--algebra", algebra, "tes, quat, complex, real or a JSON file");
  coh->add_option("--show", show, "Comma list of C,q,r,kappa");
  coh->add_option("--check", coh_checks, "Comma list of cocycle,separable,reversal,cyclic,products");
  coh->callback([&] {
    auto s = split(show), c = split(coh_checks);
    require_known(s, {"C", "q", "r", "kappa"}, "--show");
    require_known(c, {"cocycle", "separable", "reversal", "cyclic", "products"}, "--check");
    action = [&, s, c] { return cmd_cohomology(algebra, s, c); };
  });

  auto* ids = app.add_subcommand("identities", "Polynomial identity space of a degree pattern");
  std::string pattern = "2,1", emit = "dim";
  ids->add_option("--algebra", algebra, "tes, quat, complex, real or a JSON file");
  ids->add_option("--pattern", pattern, "Degree pattern such as 2,2 or 6");
  ids->add_option("--emit", emit, "dim, basis or monomials");
  ids->callback([&] { action = [&] { return cmd_identities(algebra, pattern, emit); }; });

  auto* analyze = app.add_subcommand("analyze", "Commutator and anticommutator structure, inverses");
  std::string report = "lie,jordan,series,inverses";
  analyze->add_option("--algebra", algebra, "tes, quat, complex, real or a JSON file");
  analyze->add_option("--report", report, "Comma list of lie,jordan,series,inverses");
  analyze->callback([&] {
    auto r = split(report);
    require_known(r, {"lie", "jordan", "series", "inverses"}, "--report");
    action = [&, r] { return cmd_analyze(algebra, r); };
  });

  auto* norms = app.add_subcommand("norms", "Quartic and iterated norm checks");
  std::string norm_checks = "quartic,schwarz,triangle,homogeneity,m2,conjugates";
  std::size_t samples = 1000;
  norms->add_option("--check", norm_checks, "Comma list of quartic,schwarz,triangle,homogeneity,m2,conjugates");
  norms->add_option("--samples", samples, "Samples per (j, n) for triangle and homogeneity");
  norms->callback([&] {
    auto c = split(norm_checks);
    require_known(c, {"quartic", "schwarz", "triangle", "homogeneity", "m2", "conjugates"}, "--check");
    action = [&, c] { return cmd_norms(g, c, samples); };
  });

  auto* deform = app.add_subcommand("deform", "One-parameter deformations of the tesseranion constant");
  int family = 1;
  std::string k = "2", deform_checks = "neccons,det,witness";
  deform->add_option("--family", family, "Family id 1..8");
  deform->add_option("--k", k, "Parameter, e.g. 4 or 1/2");
  deform->add_option("--checks", deform_checks, "Comma list of neccons,det,witness,inverse-iso,commutator");
  deform->callback([&] {
    auto c = split(deform_checks);
    require_known(c, {"neccons", "det", "witness", "inverse-iso", "commutator"}, "--checks");
    action = [&, c] { return cmd_deform(family, k, c); };
  });

  auto* enc = app.add_subcommand("encrypt", "Tesseranion cipher over Z/p");
  long p = 257;
  std::string key, msg, side = "left";
  bool decrypt = false;
  enc->add_option("--p", p, "Odd prime modulus");
  enc->add_option("--key", key, "Key a0,a1,a2,a3")->required();
  enc->add_option("--msg", msg, "Message (or ciphertext with --decrypt)")->required();
  enc->add_option("--side", side, "left or right");
  enc->add_flag("--decrypt", decrypt, "Decrypt instead of encrypt");
  enc->callback([&] { action = [&] { return cmd_encrypt(p, key, msg, side, decrypt); }; });

  auto* accept = app.add_subcommand("accept", "Run the acceptance criteria");
  std::vector<int> criterion_ids;
  bool timings = false;
  accept->add_option("--criterion", criterion_ids, "Criterion ids (default: all)");
  accept->add_flag("--timings", timings, "Include wall times (reports are then no longer reproducible)");
  accept->callback([&] {
    streams = g.format == "md";
    action = [&] { return cmd_accept(g, criterion_ids, timings, out, streams); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (g.threads > 0) setenv("TESSERA_THREADS", std::to_string(g.threads).c_str(), 1);

  Outcome result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }

  if (g.format == "json")
    out << result.json.dump(2) << "\n";
  else if (!streams)
    out << (result.markdown.empty() ? to_markdown(result.json) : result.markdown);
  return result.ok ? kOk : kCheckFailed;
}

}  // namespace tessera::cli
