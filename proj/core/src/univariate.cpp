#include "tessera/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tessera {

UniPoly::UniPoly(RationalVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p) {
  auto support = p.support();
  if (support.size() > 1) throw std::invalid_argument("polynomial is not univariate: " + p.to_string());
  std::size_t var = support.empty() ? 0 : support.front();
  RationalVector c(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1, Rational(0));
  for (const auto& [e, coef] : p.terms()) c[e[var]] += coef;
  return UniPoly(std::move(c));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  RationalVector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str() << (i ? "*" : "");
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  RationalVector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  RationalVector c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  RationalVector rem = a.coeffs();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  RationalVector quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + b.degree())] / b.leading();
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  RationalVector c = a.coeffs();
  Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UniPoly(std::move(c));
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p};
  if (p.degree() <= 0) return seq;
  seq.push_back(p.derivative());
  while (true) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(UniPoly(RationalVector{0}) - r);
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<UniPoly>& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(sgn(q.evaluate(x)));
  return sign_changes(signs);
}

int changes_at_infinity(const std::vector<UniPoly>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& q : seq) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

}  // namespace

int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  auto seq = sturm_sequence(square_free_part(p));
  return changes_at(seq, lo) - changes_at(seq, hi);
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  auto seq = sturm_sequence(square_free_part(p));
  return changes_at_infinity(seq, false) - changes_at_infinity(seq, true);
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading())));
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
  UniPoly sf = square_free_part(p);
  auto seq = sturm_sequence(sf);
  Rational bound = root_bound(sf);
  std::vector<RootInterval> out;
  std::vector<RootInterval> stack{{-bound, bound}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int n = changes_at(seq, iv.lo) - changes_at(seq, iv.hi);
    if (n == 0) continue;
    if (n == 1 && iv.hi - iv.lo <= width) {
      if (sf.evaluate(iv.hi) == 0) iv.lo = iv.hi;
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    if (n == 1 && sf.evaluate(mid) == 0) {
      out.push_back({mid, mid});
      continue;
    }
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

bool univariate_real_root_exists(const UniPoly& p) { return count_real_roots(p) > 0; }

bool univariate_real_root_exists(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  return univariate_real_root_exists(UniPoly::from_multi(p));
}

RootInterval nth_root_enclosure(const Rational& q, unsigned n, const Rational& width) {
  if (q < 0) throw std::domain_error("root of a negative number");
  if (n == 0) throw std::invalid_argument("zeroth root");
  if (q == 0) return {0, 0};
  double approx = std::pow(q.get_d(), 1.0 / n);
  Rational lo(approx * (1 - 1e-9)), hi(approx * (1 + 1e-9) + 1e-300);
  if (power(lo, n) > q) lo = 0;
  if (power(hi, n) < q) hi = q + 1;
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    Rational m = power(mid, n);
    if (m == q) return {mid, mid};
    if (m < q) lo = mid;
    else hi = mid;
  }
  if (power(lo, n) == q) hi = lo;
  return {lo, hi};
}

}  // namespace tessera
