#include "tessera/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tessera/matrix.hpp"

namespace tessera {

std::string SosCertificate::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    if (t.coef != 1) out += t.coef.get_str() + "*";
    out += "(" + t.base.to_string() + ")^2";
  }
  return out.empty() ? "0" : out;
}

bool verify_sos(const MultiPoly& p, const SosCertificate& cert) {
  MultiPoly sum(p.vars());
  for (const auto& t : cert.terms) {
    if (t.coef <= 0) return false;
    sum += t.base * t.base * t.coef;
  }
  return (sum - p).is_zero();
}

namespace {

std::vector<Exponents> monomials_of_degree(const std::vector<std::size_t>& support, int degree) {
  std::vector<Exponents> out;
  Exponents e{};
  e.fill(0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == support.size()) {
      e[support[pos]] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      e[support[pos]] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[support[pos]] = static_cast<std::uint8_t>(k);
      rec(pos + 1, left - k);
    }
    e[support[pos]] = 0;
  };
  if (!support.empty()) rec(0, degree);
  return out;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents e;
  for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return e;
}

enum class GramStrategy { SquaresFirst, EvenSplit, CrossFirst };

std::optional<SosCertificate> ldl_certificate(const MultiPoly& p, const std::vector<Exponents>& basis,
                                              RationalMatrix gram) {
  const std::size_t n = basis.size();
  SosCertificate cert;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational piv = gram(k, k);
    if (piv < 0) return std::nullopt;
    if (piv == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (gram(k, j) != 0) return std::nullopt;
      }
      continue;
    }
    MultiPoly base = MultiPoly::monomial(p.vars(), basis[k], 1);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (gram(j, k) != 0) base += MultiPoly::monomial(p.vars(), basis[j], gram(j, k) / piv);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (gram(i, k) == 0) continue;
      Rational f = gram(i, k) / piv;
      for (std::size_t j = k + 1; j < n; ++j) gram(i, j) -= f * gram(k, j);
    }
    cert.terms.push_back({piv, std::move(base)});
  }
  if (!verify_sos(p, cert)) return std::nullopt;
  return cert;
}

// Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
double min_eigenvalue(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - sn * akq;
          a[k * n + q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - sn * aqk;
          a[q * n + k] = sn * apk + c * aqk;
        }
      }
  }
  double m = a[0];
  for (std::size_t i = 1; i < n; ++i) m = std::min(m, a[i * n + i]);
  return m;
}

// A monomial of p that several Gram entries can produce; the weights on its
// options sum to its coefficient, and all but the last weight are free.
struct GramSlot {
  Rational coef;
  std::vector<std::pair<std::size_t, std::size_t>> options;
};

void place(RationalMatrix& gram, const std::pair<std::size_t, std::size_t>& at, const Rational& w) {
  if (at.first == at.second) {
    gram(at.first, at.first) += w;
  } else {
    gram(at.first, at.second) += w / 2;
    gram(at.second, at.first) += w / 2;
  }
}

// Coordinate ascent on the smallest Gram eigenvalue, then rational rounding
// with growing denominators; every candidate is verified exactly.
std::optional<SosCertificate> numeric_gram_search(const MultiPoly& p, const std::vector<Exponents>& basis,
                                                  const std::vector<GramSlot>& slots) {
  const std::size_t n = basis.size();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::size_t o = 0; o + 1 < slots[s].options.size(); ++o) free.emplace_back(s, o);
  if (free.empty()) return std::nullopt;
  auto weights_of = [&](const std::vector<double>& x) {
    std::vector<std::vector<double>> w(slots.size());
    std::size_t k = 0;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      double rest = slots[s].coef.get_d();
      for (std::size_t o = 0; o + 1 < slots[s].options.size(); ++o) {
        w[s].push_back(x[k]);
        rest -= x[k++];
      }
      w[s].push_back(rest);
    }
    return w;
  };
  auto objective = [&](const std::vector<double>& x) {
    std::vector<double> g(n * n, 0.0);
    auto w = weights_of(x);
    for (std::size_t s = 0; s < slots.size(); ++s)
      for (std::size_t o = 0; o < slots[s].options.size(); ++o) {
        auto [i, j] = slots[s].options[o];
        if (i == j) {
          g[i * n + i] += w[s][o];
        } else {
          g[i * n + j] += w[s][o] / 2;
          g[j * n + i] += w[s][o] / 2;
        }
      }
    return min_eigenvalue(g, n);
  };
  std::vector<double> x;
  double scale = 0;
  for (const auto& [s, o] : free) {
    x.push_back(slots[s].coef.get_d() / static_cast<double>(slots[s].options.size()));
    scale = std::max(scale, std::abs(slots[s].coef.get_d()));
  }
  double best = objective(x);
  for (double step = std::max(scale, 1.0) / 2; step > 1e-9;) {
    bool improved = false;
    for (std::size_t k = 0; k < x.size(); ++k)
      for (double dir : {1.0, -1.0}) {
        auto y = x;
        y[k] += dir * step;
        double v = objective(y);
        if (v > best + 1e-15) {
          best = v;
          x = std::move(y);
          improved = true;
        }
      }
    if (!improved) step /= 2;
  }
  if (best <= 0) return std::nullopt;
  for (long den = 1; den <= (1L << 20); den *= 2) {
    RationalMatrix gram(n, n, Rational(0));
    std::size_t k = 0;
    for (const auto& slot : slots) {
      Rational rest = slot.coef;
      for (std::size_t o = 0; o + 1 < slot.options.size(); ++o) {
        Rational w(static_cast<long>(std::llround(x[k++] * static_cast<double>(den))), den);
        w.canonicalize();
        place(gram, slot.options[o], w);
        rest -= w;
      }
      place(gram, slot.options.back(), rest);
    }
    if (auto cert = ldl_certificate(p, basis, gram)) return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SosCertificate> find_sos(const MultiPoly& p) {
  if (p.is_zero()) return SosCertificate{};
  int deg = p.total_degree();
  if (deg % 2 != 0 || !p.is_homogeneous()) return std::nullopt;
  auto support = p.support();
  if (support.empty()) {
    Rational c = p.terms().begin()->second;
    if (c < 0) return std::nullopt;
    return SosCertificate{{{c, MultiPoly(p.vars(), 1)}}};
  }
  auto candidates = monomials_of_degree(support, deg / 2);
  // A half-degree monomial m can appear only if p has a nonnegative coefficient on m^2;
  // a zero coefficient forces its Gram row to vanish, so it is dropped.
  std::vector<Exponents> basis;
  for (const auto& m : candidates) {
    Rational c = p.coefficient(add_exps(m, m));
    if (c < 0) return std::nullopt;
    if (c > 0) basis.push_back(m);
  }
  std::map<Exponents, std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) pairs[add_exps(basis[i], basis[j])].emplace_back(i, j);
  for (const auto& [e, c] : p.terms()) {
    if (!pairs.count(e)) return std::nullopt;
  }
  for (GramStrategy strategy : {GramStrategy::CrossFirst, GramStrategy::SquaresFirst, GramStrategy::EvenSplit}) {
    RationalMatrix gram(basis.size(), basis.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
      const auto& options = pairs.at(e);
      std::vector<std::pair<std::size_t, std::size_t>> chosen;
      for (const auto& pr : options) {
        bool diagonal = pr.first == pr.second;
        if (strategy == GramStrategy::SquaresFirst && diagonal) chosen = {pr};
        if (strategy == GramStrategy::CrossFirst && !diagonal) chosen.push_back(pr);
      }
      if (chosen.empty()) chosen = options;
      if (strategy == GramStrategy::EvenSplit) chosen = options;
      Rational share = c / static_cast<long>(chosen.size());
      for (const auto& [i, j] : chosen) {
        if (i == j) {
          gram(i, i) += share;
        } else {
          gram(i, j) += share / 2;
          gram(j, i) += share / 2;
        }
      }
    }
    if (auto cert = ldl_certificate(p, basis, gram)) return cert;
  }
  std::vector<GramSlot> slots;
  for (const auto& [e, c] : p.terms()) slots.push_back({c, pairs.at(e)});
  return numeric_gram_search(p, basis, slots);
}

namespace {

bool positive_definite(const RationalMatrix& q) {
  RationalMatrix a = q;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace

bool certificate_is_definite(const SosCertificate& cert, std::size_t nvars) {
  std::vector<bool> forced(nvars, false);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::optional<Rational>> zeros(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (forced[v]) zeros[v] = Rational(0);
    }
    std::vector<MultiPoly> linear;
    for (const auto& term : cert.terms) {
      MultiPoly b = term.base.specialize(zeros);
      if (b.is_zero()) continue;
      auto support = b.support();
      if (support.empty()) {
        // A nonzero constant square never vanishes: the polynomial is strictly positive.
        std::fill(forced.begin(), forced.end(), true);
        return true;
      }
      int deg = b.total_degree();
      if (b.term_count() == 1 && support.size() == 1) {
        if (!forced[support[0]]) {
          forced[support[0]] = true;
          changed = true;
        }
      } else if (deg == 1 && b.is_homogeneous()) {
        linear.push_back(b);
      } else if (deg == 2 && b.is_homogeneous()) {
        RationalMatrix q(support.size(), support.size(), Rational(0));
        for (const auto& [e, c] : b.terms()) {
          std::vector<std::size_t> idx;
          for (std::size_t k = 0; k < support.size(); ++k) {
            for (int t = 0; t < e[support[k]]; ++t) idx.push_back(k);
          }
          if (idx[0] == idx[1]) q(idx[0], idx[0]) += c;
          else {
            q(idx[0], idx[1]) += c / 2;
            q(idx[1], idx[0]) += c / 2;
          }
        }
        if (positive_definite(q) || positive_definite([&] {
              RationalMatrix neg = q;
              for (std::size_t r = 0; r < neg.rows(); ++r)
                for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = -neg(r, c);
              return neg;
            }())) {
          for (auto v : support) {
            if (!forced[v]) {
              forced[v] = true;
              changed = true;
            }
          }
        }
      }
    }
    if (!linear.empty()) {
      RationalMatrix m(linear.size(), nvars, Rational(0));
      for (std::size_t r = 0; r < linear.size(); ++r)
        for (const auto& [e, c] : linear[r].terms())
          for (std::size_t v = 0; v < nvars; ++v)
            if (e[v] == 1) m(r, v) = c;
      reduce_rows(m);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::size_t> nz;
        for (std::size_t v = 0; v < nvars; ++v)
          if (m(r, v) != 0) nz.push_back(v);
        if (nz.size() == 1 && !forced[nz[0]]) {
          forced[nz[0]] = true;
          changed = true;
        }
      }
    }
  }
  return std::all_of(forced.begin(), forced.end(), [](bool f) { return f; });
}

namespace {

bool antiparallel(const RationalVector& u, const RationalVector& v) {
  // v = -lambda * u with lambda > 0
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0 && v[i] == 0) continue;
    if (u[i] == 0 || v[i] == 0) return false;
    Rational l = -v[i] / u[i];
    if (lambda && *lambda != l) return false;
    lambda = l;
  }
  return lambda && *lambda > 0;
}

class SignSearch {
 public:
  explicit SignSearch(const MultiPoly& p) : p_(p) {
    for (const auto& [e, c] : p.terms()) scale_ += std::abs(c.get_d());
  }

  bool consider(const RationalVector& point) {
    if (is_zero(point)) return false;
    std::vector<double> d(point.size());
    double mag = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
      d[i] = point[i].get_d();
      mag = std::max(mag, std::abs(d[i]));
    }
    double val = p_.evaluate_double(d);
    double tol = 1e-9 * scale_ * std::pow(std::max(mag, 1.0), std::max(p_.total_degree(), 0));
    bool want_pos = positives_.size() < kKeep && val > -tol;
    bool want_nonpos = nonpositives_.size() < kKeep && val < tol;
    if (!want_pos && !want_nonpos) return false;
    Rational exact = p_.evaluate(point);
    if (exact > 0 && positives_.size() < kKeep) {
      for (const auto& [v, pv] : nonpositives_) {
        if (pv == 0 || !antiparallel(point, v)) return finish(point, exact, v, pv);
      }
      positives_.emplace_back(point, exact);
    } else if (exact <= 0 && nonpositives_.size() < kKeep) {
      for (const auto& [u, pu] : positives_) {
        if (exact == 0 || !antiparallel(u, point)) return finish(u, pu, point, exact);
      }
      nonpositives_.emplace_back(point, exact);
    }
    return false;
  }

  std::optional<SignChangeWitness> result;

 private:
  bool finish(const RationalVector& u, const Rational& pu, const RationalVector& v, const Rational& pv) {
    result = SignChangeWitness{u, v, pu, pv};
    return true;
  }

  static constexpr std::size_t kKeep = 16;
  const MultiPoly& p_;
  double scale_ = 0;
  std::vector<std::pair<RationalVector, Rational>> positives_, nonpositives_;
};

}  // namespace

std::optional<SignChangeWitness> find_sign_change(const MultiPoly& p, const GridSpec& grid) {
  const std::size_t n = p.nvars();
  if (n == 0 || p.is_zero()) return std::nullopt;
  SignSearch search(p);
  std::size_t visited = 0;
  auto visit = [&](const RationalVector& pt) {
    ++visited;
    return search.consider(pt);
  };
  const std::vector<Rational> small{1, -1, 2, -2};
  // One nonzero component.
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      RationalVector pt(n, Rational(0));
      pt[i] = s;
      if (visit(pt)) return search.result;
    }
  // Two nonzero components (all but two zero).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const auto& a : small)
        for (const auto& b : small) {
          RationalVector pt(n, Rational(0));
          pt[i] = a;
          pt[j] = b;
          if (visit(pt)) return search.result;
        }
  // Exactly one zero component.
  if (n >= 3) {
    for (std::size_t z = 0; z < n && visited < grid.max_points; ++z) {
      std::vector<std::size_t> digits(n - 1, 0);
      while (visited < grid.max_points) {
        RationalVector pt(n, Rational(0));
        for (std::size_t k = 0, d = 0; k < n; ++k) {
          if (k == z) continue;
          pt[k] = small[digits[d++]];
        }
        if (visit(pt)) return search.result;
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == small.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
    }
  }
  // Dense grid.
  std::set<Rational> value_set;
  for (int den : grid.denominators)
    for (int num = -grid.bound * den; num <= grid.bound * den; ++num) value_set.insert(Rational(num, den));
  std::vector<Rational> values(value_set.begin(), value_set.end());
  std::vector<std::size_t> digits(n, 0);
  std::size_t budget = grid.max_points;
  for (std::size_t count = 0; count < budget; ++count) {
    RationalVector pt(n);
    for (std::size_t k = 0; k < n; ++k) pt[k] = values[digits[k]];
    if (search.consider(pt)) return search.result;
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == values.size()) digits[pos++] = 0;
    if (pos == n) break;
  }
  return std::nullopt;
}

std::optional<SliceRootWitness> find_slice_root(const MultiPoly& p, int range) {
  const std::size_t n = p.nvars();
  if (n < 2 || p.is_zero()) return std::nullopt;
  if (n > 4) range = std::min(range, 1);
  std::vector<int> values{0};
  for (int k = 1; k <= range; ++k) {
    values.push_back(k);
    values.push_back(-k);
  }
  std::size_t budget = 20000;
  for (std::size_t var = 0; var < n; ++var) {
    std::vector<std::size_t> digits(n - 1, 0);
    while (budget-- > 0) {
      RationalVector base(n, Rational(0));
      for (std::size_t k = 0, d = 0; k < n; ++k) {
        if (k == var) continue;
        base[k] = values[digits[d++]];
      }
      if (!is_zero(base)) {
        std::vector<std::optional<Rational>> bind(n);
        for (std::size_t k = 0; k < n; ++k)
          if (k != var) bind[k] = base[k];
        MultiPoly restricted = p.specialize(bind);
        if (!restricted.is_zero()) {
          UniPoly u = UniPoly::from_multi(restricted);
          if (u.degree() >= 1 && count_real_roots(u) > 0) {
            auto roots = isolate_real_roots(u);
            return SliceRootWitness{base, var, u, roots.front()};
          }
        }
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == values.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return std::nullopt;
}

std::optional<ZeroWitness> find_zero_witness(const MultiPoly& p, const GridSpec& grid) {
  if (auto w = find_sign_change(p, grid)) return ZeroWitness{*w};
  if (auto w = find_slice_root(p)) return ZeroWitness{*w};
  return std::nullopt;
}

bool verify_witness(const MultiPoly& p, const SignChangeWitness& w) {
  if (w.positive.size() != p.nvars() || w.nonpositive.size() != p.nvars()) return false;
  if (is_zero(w.nonpositive) || is_zero(w.positive)) return false;
  Rational pu = p.evaluate(w.positive), pv = p.evaluate(w.nonpositive);
  if (pu != w.positive_value || pv != w.nonpositive_value) return false;
  if (!(pu > 0) || !(pv <= 0)) return false;
  return pv == 0 || !antiparallel(w.positive, w.nonpositive);
}

bool verify_witness(const MultiPoly& p, const SliceRootWitness& w) {
  if (w.base.size() != p.nvars() || w.var >= p.nvars()) return false;
  bool off_axis = false;
  std::vector<std::optional<Rational>> bind(p.nvars());
  for (std::size_t k = 0; k < p.nvars(); ++k) {
    if (k == w.var) continue;
    bind[k] = w.base[k];
    if (w.base[k] != 0) off_axis = true;
  }
  if (!off_axis) return false;
  MultiPoly restricted = p.specialize(bind);
  if (restricted.is_zero()) return false;
  UniPoly u = UniPoly::from_multi(restricted);
  if (!(u == w.restriction)) return false;
  if (w.interval.exact()) return u.evaluate(w.interval.lo) == 0;
  return count_real_roots(u, w.interval.lo, w.interval.hi) >= 1;
}

bool verify_witness(const MultiPoly& p, const ZeroWitness& w) {
  return std::visit([&](const auto& x) { return verify_witness(p, x); }, w);
}

std::string witness_kind(const ZeroWitness& w) {
  return std::holds_alternative<SignChangeWitness>(w) ? "sign-change" : "slice-root";
}

std::string describe(const ZeroWitness& w) {
  std::ostringstream out;
  if (const auto* s = std::get_if<SignChangeWitness>(&w)) {
    out << "p" << to_string(s->positive) << " = " << s->positive_value.get_str() << " > 0, p"
        << to_string(s->nonpositive) << " = " << s->nonpositive_value.get_str() << " <= 0";
  } else {
    const auto& r = std::get<SliceRootWitness>(w);
    out << "slice " << to_string(r.base) << " + s*e" << r.var << ": " << r.restriction.to_string()
        << " has a root in [" << r.interval.lo.get_str() << ", " << r.interval.hi.get_str() << "]";
  }
  return out.str();
}

nlohmann::ordered_json witness_to_json(const ZeroWitness& w) {
  nlohmann::ordered_json out;
  auto vec = [](const RationalVector& v) {
    std::vector<std::string> s;
    for (const auto& q : v) s.push_back(q.get_str());
    return s;
  };
  out["kind"] = witness_kind(w);
  if (const auto* s = std::get_if<SignChangeWitness>(&w)) {
    out["positive"] = vec(s->positive);
    out["positive_value"] = s->positive_value.get_str();
    out["nonpositive"] = vec(s->nonpositive);
    out["nonpositive_value"] = s->nonpositive_value.get_str();
  } else {
    const auto& r = std::get<SliceRootWitness>(w);
    out["base"] = vec(r.base);
    out["free_component"] = r.var;
    out["restriction"] = r.restriction.to_string();
    out["interval"] = {r.interval.lo.get_str(), r.interval.hi.get_str()};
  }
  return out;
}

}  // namespace tessera
