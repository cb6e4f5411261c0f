#include "tessera/expression.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace tessera {

struct Expr::Node {
  Kind kind = Kind::Number;
  std::string name;
  Rational value;
  std::vector<Expr> children;
  std::vector<std::pair<Rational, Expr>> terms;
};

Expr Expr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::number(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::product(Expr left, Expr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = {std::move(left), std::move(right)};
  return Expr(std::move(n));
}

Expr Expr::conjugate(Expr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Conjugate;
  n->children = {std::move(inner)};
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<std::pair<Rational, Expr>> terms) {
  if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->terms = std::move(terms);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string& Expr::name() const { return node_->name; }
const Rational& Expr::value() const { return node_->value; }
const Expr& Expr::left() const { return node_->children.at(0); }
const Expr& Expr::right() const { return node_->children.at(1); }
const Expr& Expr::inner() const { return node_->children.at(0); }
const std::vector<std::pair<Rational, Expr>>& Expr::terms() const { return node_->terms; }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression parse error at " + std::to_string(pos_) + " in '" + std::string(text_) +
                                "': " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr parse_sum() {
    std::vector<std::pair<Rational, Expr>> terms;
    Rational sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    while (true) {
      auto [coef, e] = parse_term();
      terms.emplace_back(sign * coef, std::move(e));
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
    }
    return Expr::sum(std::move(terms));
  }

  std::pair<Rational, Expr> parse_term() {
    Expr first = parse_factor();
    if (!accept('*')) return {Rational(1), first};
    Expr second = parse_factor();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '*') fail("products of more than two factors need parentheses");
    if (first.kind() == Expr::Kind::Number) return {first.value(), second};
    if (second.kind() == Expr::Kind::Number) return {second.value(), first};
    return {Rational(1), Expr::product(std::move(first), std::move(second))};
  }

  Expr parse_factor() {
    Expr base = parse_primary();
    while (accept('^')) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '2') fail("only squares (^2) are supported");
      ++pos_;
      base = Expr::product(base, base);
    }
    return base;
  }

  Expr parse_primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(' || c == '[') {
      ++pos_;
      Expr e = parse_sum();
      expect(c == '(' ? ')' : ']');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      return Expr::number(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string id(text_.substr(start, pos_ - start));
      if (id == "bar") {
        expect('(');
        Expr e = parse_sum();
        expect(')');
        return Expr::conjugate(std::move(e));
      }
      return Expr::variable(std::move(id));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_variables(const Expr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::Variable: out.insert(e.name()); break;
    case Expr::Kind::Number: break;
    case Expr::Kind::Sum:
      for (const auto& [c, t] : e.terms()) collect_variables(t, out);
      break;
    case Expr::Kind::Product:
      collect_variables(e.left(), out);
      collect_variables(e.right(), out);
      break;
    case Expr::Kind::Conjugate: collect_variables(e.inner(), out); break;
  }
}

bool conjugation_supported(const FiniteGroup& g) {
  switch (g.name()) {
    case GroupName::Trivial:
    case GroupName::Z2:
    case GroupName::Z4:
    case GroupName::Z2xZ2: return true;
    default: return false;
  }
}

}  // namespace

Expr Expr::parse(std::string_view text) { return Parser(text).parse_all(); }

std::vector<std::string> Expr::variables() const {
  std::set<std::string> names;
  collect_variables(*this, names);
  return {names.begin(), names.end()};
}

Expr Expr::mirror() const {
  switch (kind()) {
    case Kind::Variable:
    case Kind::Number: return *this;
    case Kind::Sum: {
      std::vector<std::pair<Rational, Expr>> t;
      for (const auto& [c, e] : terms()) t.emplace_back(c, e.mirror());
      return sum(std::move(t));
    }
    case Kind::Product: return product(right().mirror(), left().mirror());
    case Kind::Conjugate: return conjugate(inner().mirror());
  }
  return *this;
}

Expr Expr::substitute(const std::map<std::string, Expr>& images) const {
  switch (kind()) {
    case Kind::Variable: {
      auto it = images.find(name());
      return it == images.end() ? *this : it->second;
    }
    case Kind::Number: return *this;
    case Kind::Sum: {
      std::vector<std::pair<Rational, Expr>> t;
      for (const auto& [c, e] : terms()) t.emplace_back(c, e.substitute(images));
      return sum(std::move(t));
    }
    case Kind::Product: return product(left().substitute(images), right().substitute(images));
    case Kind::Conjugate: return conjugate(inner().substitute(images));
  }
  return *this;
}

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::Variable: return name();
    case Kind::Number: return value().get_str();
    case Kind::Sum: {
      std::string out;
      for (const auto& [c, e] : terms()) {
        if (out.empty()) {
          if (c == -1) out += "-";
          else if (c != 1) out += c.get_str() + "*";
        } else if (c == 1) {
          out += " + ";
        } else if (c == -1) {
          out += " - ";
        } else if (c < 0) {
          out += " - " + Rational(-c).get_str() + "*";
        } else {
          out += " + " + c.get_str() + "*";
        }
        std::string inner = e.to_string();
        out += e.kind() == Kind::Sum ? "(" + inner + ")" : inner;
      }
      return "(" + out + ")";
    }
    case Kind::Product: {
      auto wrap = [](const Expr& e) {
        std::string s = e.to_string();
        return e.kind() == Kind::Product ? "(" + s + ")" : s;
      };
      return wrap(left()) + "*" + wrap(right());
    }
    case Kind::Conjugate: return "bar(" + inner().to_string() + ")";
  }
  return "?";
}

Identity Identity::parse(std::string label, std::string_view text) {
  Identity id;
  id.label = std::move(label);
  std::size_t start = 0;
  while (true) {
    std::size_t eq = text.find('=', start);
    id.sides.push_back(Expr::parse(text.substr(start, eq == std::string_view::npos ? eq : eq - start)));
    if (eq == std::string_view::npos) break;
    start = eq + 1;
  }
  return id;
}

Identity Identity::mirror() const {
  Identity m;
  m.label = label + " (mirrored)";
  for (const auto& s : sides) m.sides.push_back(s.mirror());
  return m;
}

std::vector<std::string> Identity::variables() const {
  std::set<std::string> names;
  for (const auto& s : sides) collect_variables(s, names);
  return {names.begin(), names.end()};
}

SymbolicContext make_symbolic_context(int dim, const std::vector<std::string>& variable_names) {
  std::vector<std::string> names;
  for (const auto& v : variable_names)
    for (int k = 0; k < dim; ++k) names.push_back(v + std::to_string(k));
  SymbolicContext ctx;
  ctx.vars = make_vars(std::move(names));
  std::size_t idx = 0;
  for (const auto& v : variable_names) {
    SymbolicElement el;
    for (int k = 0; k < dim; ++k) el.push_back(MultiPoly::variable(ctx.vars, idx++));
    ctx.elements.emplace(v, std::move(el));
  }
  return ctx;
}

SymbolicElement symbolic_constant(const VarNames& vars, const RationalVector& value) {
  SymbolicElement out;
  for (const auto& q : value) out.emplace_back(vars, q);
  return out;
}

SymbolicElement evaluate_symbolic(const Expr& e, const StructureConstant& c,
                                  const std::map<std::string, SymbolicElement>& bindings, const VarNames& vars) {
  const auto n = static_cast<std::size_t>(c.order());
  switch (e.kind()) {
    case Expr::Kind::Variable: {
      auto it = bindings.find(e.name());
      if (it == bindings.end()) throw std::invalid_argument("unbound element name: " + e.name());
      return it->second;
    }
    case Expr::Kind::Number: {
      SymbolicElement out(n, MultiPoly(vars));
      out[0] = MultiPoly(vars, e.value());
      return out;
    }
    case Expr::Kind::Sum: {
      SymbolicElement out(n, MultiPoly(vars));
      for (const auto& [coef, t] : e.terms()) {
        auto v = evaluate_symbolic(t, c, bindings, vars);
        for (std::size_t k = 0; k < n; ++k) out[k] += v[k] * coef;
      }
      return out;
    }
    case Expr::Kind::Product:
      return twisted_product(c, evaluate_symbolic(e.left(), c, bindings, vars),
                             evaluate_symbolic(e.right(), c, bindings, vars));
    case Expr::Kind::Conjugate: {
      if (!conjugation_supported(c.group())) throw std::invalid_argument("conjugation not defined for this grading");
      auto v = evaluate_symbolic(e.inner(), c, bindings, vars);
      for (std::size_t k = 1; k < n; ++k) v[k] *= Rational(-1);
      return v;
    }
  }
  throw std::logic_error("bad expression node");
}

AlgebraElement evaluate_numeric(const Expr& e, const TwistedAlgebra& algebra,
                                const std::map<std::string, AlgebraElement>& bindings) {
  switch (e.kind()) {
    case Expr::Kind::Variable: {
      auto it = bindings.find(e.name());
      if (it == bindings.end()) throw std::invalid_argument("unbound element name: " + e.name());
      return algebra.reduce(it->second);
    }
    case Expr::Kind::Number: return algebra.scale(e.value(), algebra.one());
    case Expr::Kind::Sum: {
      AlgebraElement out = algebra.zero();
      for (const auto& [coef, t] : e.terms()) out = algebra.add(out, algebra.scale(coef, evaluate_numeric(t, algebra, bindings)));
      return out;
    }
    case Expr::Kind::Product:
      return algebra.product(evaluate_numeric(e.left(), algebra, bindings), evaluate_numeric(e.right(), algebra, bindings));
    case Expr::Kind::Conjugate: return algebra.conjugate(evaluate_numeric(e.inner(), algebra, bindings));
  }
  throw std::logic_error("bad expression node");
}

std::vector<SymbolicElement> identity_residuals(const TwistedAlgebra& algebra, const Identity& identity,
                                               const std::map<std::string, AlgebraElement>& constants) {
  std::vector<std::string> free;
  for (const auto& v : identity.variables()) {
    if (!constants.count(v)) free.push_back(v);
  }
  auto ctx = make_symbolic_context(algebra.dim(), free);
  auto bindings = ctx.elements;
  for (const auto& [name, value] : constants) bindings[name] = symbolic_constant(ctx.vars, value.coeffs);
  std::vector<SymbolicElement> values;
  for (const auto& side : identity.sides) values.push_back(evaluate_symbolic(side, algebra.constant(), bindings, ctx.vars));
  std::vector<SymbolicElement> residuals;
  if (values.size() == 1) {
    residuals.push_back(values[0]);
    return residuals;
  }
  for (std::size_t k = 1; k < values.size(); ++k) {
    SymbolicElement r = values[0];
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= values[k][i];
    residuals.push_back(std::move(r));
  }
  return residuals;
}

bool verify_expression_identity(const TwistedAlgebra& algebra, const Identity& identity,
                                const std::map<std::string, AlgebraElement>& constants) {
  for (const auto& r : identity_residuals(algebra, identity, constants)) {
    if (!std::all_of(r.begin(), r.end(), [](const MultiPoly& p) { return p.is_zero(); })) return false;
  }
  return true;
}

LinearCondition parse_linear_condition(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw std::invalid_argument("linear condition needs '=': " + std::string(text));
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  LinearCondition cond;
  cond.dependent = std::string(trim(text.substr(0, eq)));
  std::string_view rhs = text.substr(eq + 1);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < rhs.size() && (std::isspace(static_cast<unsigned char>(rhs[pos])) || rhs[pos] == '*')) ++pos;
  };
  Rational sign = 1;
  bool expect_term = true;
  while (true) {
    skip();
    if (pos >= rhs.size()) break;
    char c = rhs[pos];
    if (c == '+' || c == '-') {
      sign = c == '-' ? Rational(-sign) : sign;
      ++pos;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw std::invalid_argument("malformed linear condition: " + std::string(text));
    Rational coef = 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < rhs.size() && (std::isdigit(static_cast<unsigned char>(rhs[pos])) || rhs[pos] == '/')) ++pos;
      coef = parse_rational(rhs.substr(start, pos - start));
      skip();
    }
    std::size_t start = pos;
    while (pos < rhs.size() && (std::isalnum(static_cast<unsigned char>(rhs[pos])) || rhs[pos] == '_')) ++pos;
    if (start == pos) throw std::invalid_argument("malformed linear condition: " + std::string(text));
    cond.form[std::string(rhs.substr(start, pos - start))] += sign * coef;
    sign = 1;
    expect_term = false;
  }
  return cond;
}

}  // namespace tessera
