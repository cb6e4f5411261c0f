#include "tessera/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tessera {

namespace {

Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

int degree_of(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

VarNames make_vars(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many indeterminates");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarNames make_vars(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_vars(std::move(names));
}

bool same_vars(const VarNames& a, const VarNames& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

MultiPoly::MultiPoly(VarNames vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarNames vars, const Rational& constant) : vars_(std::move(vars)) {
  if (constant != 0) terms_.emplace(zero_exponents(), constant);
}

MultiPoly MultiPoly::variable(VarNames vars, std::size_t index) {
  if (!vars || index >= vars->size()) throw std::out_of_range("variable index out of range");
  Exponents e = zero_exponents();
  e[index] = 1;
  return monomial(std::move(vars), e, 1);
}

MultiPoly MultiPoly::variable(VarNames vars, const std::string& name) {
  MultiPoly probe(vars);
  return variable(vars, probe.var_index(name));
}

MultiPoly MultiPoly::monomial(VarNames vars, const Exponents& exps, const Rational& coef) {
  MultiPoly p(std::move(vars));
  p.add_term(exps, coef);
  return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
  if (vars_) {
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if ((*vars_)[i] == name) return i;
    }
  }
  throw std::invalid_argument("unknown indeterminate: " + name);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree_of(t.first) == d; });
}

std::vector<std::size_t> MultiPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (degree_in(v) > 0) out.push_back(v);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::adopt(const MultiPoly& o) {
  if (!o.vars_) return;
  if (!vars_) {
    vars_ = o.vars_;
    return;
  }
  if (!same_vars(vars_, o.vars_)) throw std::invalid_argument("polynomials over different indeterminates");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(a.vars_ ? a.vars_ : b.vars_);
  out.adopt(b);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = static_cast<unsigned>(ea[i]) + eb[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_ != o.terms_) return false;
  if (terms_.empty()) return true;
  return same_vars(vars_, o.vars_);
}

Rational MultiPoly::evaluate(const RationalVector& point) const {
  if (point.size() < nvars()) throw std::invalid_argument("evaluation point has too few coordinates");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

double MultiPoly::evaluate_double(const std::vector<double>& point) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::specialize(const std::map<std::string, Rational>& bindings) const {
  std::vector<std::optional<Rational>> slots(nvars());
  for (const auto& [name, value] : bindings) slots[var_index(name)] = value;
  return specialize(slots);
}

MultiPoly MultiPoly::specialize(const std::vector<std::optional<Rational>>& bindings) const {
  if (bindings.size() > nvars()) throw std::invalid_argument("too many bindings");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    Rational nc = c;
    for (std::size_t i = 0; i < bindings.size(); ++i) {
      if (!bindings[i]) continue;
      for (unsigned k = 0; k < e[i]; ++k) nc *= *bindings[i];
      ne[i] = 0;
    }
    out.add_term(ne, nc);
  }
  return out;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images, VarNames target) const {
  if (images.size() != nvars()) throw std::invalid_argument("compose needs one image per variable");
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t(target, c);
    for (std::size_t i = 0; i < nvars(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= images[i];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::rebase(VarNames target) const {
  std::vector<std::size_t> map(nvars());
  MultiPoly probe(target);
  for (std::size_t i = 0; i < nvars(); ++i) map[i] = probe.var_index((*vars_)[i]);
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents ne = zero_exponents();
    for (std::size_t i = 0; i < nvars(); ++i) ne[map[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first, then reverse lexicographic for readability.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = degree_of(a.first), db = degree_of(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool has_vars = degree_of(e) > 0;
    if (mag != 1 || !has_vars) {
      out << mag.get_str();
      if (has_vars) out << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) out << "*";
      first_factor = false;
      out << (*vars_)[i];
      if (e[i] > 1) out << "^" << static_cast<int>(e[i]);
    }
  }
  return out.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  MultiPoly quotient(a.vars() ? a.vars() : b.vars());
  MultiPoly rem = a;
  const auto& [lead_b_exp, lead_b_coef] = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& [lead_r_exp, lead_r_coef] = *rem.terms().rbegin();
    Exponents e;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (lead_r_exp[i] < lead_b_exp[i]) return std::nullopt;
      e[i] = static_cast<std::uint8_t>(lead_r_exp[i] - lead_b_exp[i]);
    }
    MultiPoly t = MultiPoly::monomial(quotient.vars(), e, lead_r_coef / lead_b_coef);
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

nlohmann::ordered_json poly_to_json(const MultiPoly& p) {
  nlohmann::ordered_json out;
  out["vars"] = p.vars() ? *p.vars() : std::vector<std::string>{};
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    std::vector<int> exps(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(p.nvars()));
    t["exp"] = exps;
    t["num"] = c.get_num().get_str();
    t["den"] = c.get_den().get_str();
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

MultiPoly poly_from_json(const nlohmann::ordered_json& j) {
  auto vars = make_vars(j.at("vars").get<std::vector<std::string>>());
  MultiPoly p(vars);
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exp").get<std::vector<int>>();
    if (exps.size() != vars->size()) throw std::invalid_argument("term exponent length mismatch");
    Exponents e{};
    e.fill(0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
      e[i] = static_cast<std::uint8_t>(exps[i]);
    }
    auto as_text = [](const nlohmann::ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    Rational c(Integer(as_text(t.at("num"))), Integer(as_text(t.value("den", nlohmann::ordered_json("1")))));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

}  // namespace tessera
