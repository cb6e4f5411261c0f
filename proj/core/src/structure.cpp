#include "tessera/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "tessera/determinant.hpp"
#include "tessera/matrix.hpp"

namespace tessera {

BilinearAlgebra::BilinearAlgebra(std::size_t dim, std::vector<RationalVector> table, std::string name)
    : dim_(dim), table_(std::move(table)), name_(std::move(name)) {
  if (table_.size() != dim_ * dim_) throw std::invalid_argument("structure tensor has wrong size");
  for (const auto& v : table_)
    if (v.size() != dim_) throw std::invalid_argument("structure tensor entry has wrong length");
}

RationalVector BilinearAlgebra::multiply(const RationalVector& x, const RationalVector& y) const {
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational s = x[i] * y[j];
      const auto& p = product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (p[k] != 0) out[k] += s * p[k];
    }
  }
  return out;
}

SymbolicElement BilinearAlgebra::multiply(const SymbolicElement& x, const SymbolicElement& y) const {
  SymbolicElement out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& p = product(i, j);
      if (tessera::is_zero(p)) continue;
      MultiPoly s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (p[k] != 0) out[k] += s * p[k];
    }
  return out;
}

bool BilinearAlgebra::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& a = product(i, j);
      const auto& b = product(j, i);
      for (std::size_t k = 0; k < dim_; ++k)
        if (a[k] != -b[k]) return false;
    }
  return true;
}

bool BilinearAlgebra::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

bool BilinearAlgebra::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const RationalVector& v) { return tessera::is_zero(v); });
}

namespace {

BilinearAlgebra symmetrized(const TwistedAlgebra& a, int sign, const std::string& suffix) {
  const auto n = static_cast<std::size_t>(a.dim());
  std::vector<RationalVector> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto ij = a.product(a.basis(static_cast<int>(i)), a.basis(static_cast<int>(j)));
      auto ji = a.product(a.basis(static_cast<int>(j)), a.basis(static_cast<int>(i)));
      RationalVector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = (ij[k] + sign * ji[k]) / 2;
      table.push_back(std::move(v));
    }
  return BilinearAlgebra(n, std::move(table), a.name() + suffix);
}

using Residual = std::function<RationalVector(const std::vector<RationalVector>&)>;

std::vector<RationalVector> search_counterexample(std::size_t dim, std::size_t arity, const Residual& residual) {
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    std::vector<RationalVector> args;
    for (auto i : idx) {
      RationalVector v(dim);
      v[i] = 1;
      args.push_back(std::move(v));
    }
    if (!is_zero(residual(args))) return args;
    std::size_t pos = 0;
    while (pos < arity && ++idx[pos] == dim) idx[pos++] = 0;
    if (pos == arity) break;
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<RationalVector> args(arity, RationalVector(dim));
    for (auto& v : args)
      for (auto& c : v) c = dist(rng);
    if (!is_zero(residual(args))) return args;
  }
  return {};
}

bool all_zero(const SymbolicElement& e) {
  return std::all_of(e.begin(), e.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

SymbolicElement difference(SymbolicElement a, const SymbolicElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

RationalVector difference(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

PropertyCheck symbolic_property(const BilinearAlgebra& alg, std::size_t arity,
                                const std::function<SymbolicElement(const std::vector<SymbolicElement>&)>& sym,
                                const Residual& num) {
  static const std::vector<std::string> kNames{"x", "y", "z"};
  auto ctx = make_symbolic_context(static_cast<int>(alg.dim()),
                                   std::vector<std::string>(kNames.begin(), kNames.begin() + static_cast<std::ptrdiff_t>(arity)));
  std::vector<SymbolicElement> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(ctx.elements.at(kNames[i]));
  PropertyCheck out;
  out.holds = all_zero(sym(args));
  if (!out.holds) out.counterexample = search_counterexample(alg.dim(), arity, num);
  return out;
}

}  // namespace

BilinearAlgebra commutator_algebra(const TwistedAlgebra& algebra) { return symmetrized(algebra, -1, "^-"); }
BilinearAlgebra anticommutator_algebra(const TwistedAlgebra& algebra) { return symmetrized(algebra, 1, "^+"); }

BilinearAlgebra as_bilinear(const TwistedAlgebra& algebra) {
  const auto n = static_cast<std::size_t>(algebra.dim());
  std::vector<RationalVector> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table.push_back(algebra.product(algebra.basis(static_cast<int>(i)), algebra.basis(static_cast<int>(j))).coeffs);
  return BilinearAlgebra(n, std::move(table), algebra.name());
}

PropertyCheck jacobi_check(const BilinearAlgebra& lie) {
  if (!lie.is_antisymmetric()) throw std::invalid_argument("Jacobi check requires an antisymmetric product");
  auto sym = [&](const std::vector<SymbolicElement>& a) {
    auto t1 = lie.multiply(a[0], lie.multiply(a[1], a[2]));
    auto t2 = lie.multiply(a[1], lie.multiply(a[2], a[0]));
    auto t3 = lie.multiply(a[2], lie.multiply(a[0], a[1]));
    for (std::size_t i = 0; i < t1.size(); ++i) t1[i] += t2[i] + t3[i];
    return t1;
  };
  auto num = [&](const std::vector<RationalVector>& a) {
    auto t1 = lie.multiply(a[0], lie.multiply(a[1], a[2]));
    auto t2 = lie.multiply(a[1], lie.multiply(a[2], a[0]));
    auto t3 = lie.multiply(a[2], lie.multiply(a[0], a[1]));
    for (std::size_t i = 0; i < t1.size(); ++i) t1[i] += t2[i] + t3[i];
    return t1;
  };
  return symbolic_property(lie, 3, sym, num);
}

JordanResult jordan_check(const BilinearAlgebra& jordan) {
  if (!jordan.is_symmetric()) throw std::invalid_argument("Jordan check requires a symmetric product");
  auto ctx = make_symbolic_context(static_cast<int>(jordan.dim()), {"x", "y"});
  const auto& x = ctx.elements.at("x");
  const auto& y = ctx.elements.at("y");
  auto xx = jordan.multiply(x, x);
  JordanResult out;
  out.vars = ctx.vars;
  out.residual = difference(jordan.multiply(jordan.multiply(x, y), xx), jordan.multiply(x, jordan.multiply(y, xx)));
  out.holds = all_zero(out.residual);
  if (!out.holds) {
    out.counterexample = search_counterexample(jordan.dim(), 2, [&](const std::vector<RationalVector>& a) {
      auto sq = jordan.multiply(a[0], a[0]);
      return difference(jordan.multiply(jordan.multiply(a[0], a[1]), sq),
                        jordan.multiply(a[0], jordan.multiply(a[1], sq)));
    });
  }
  return out;
}

PropertyCheck flexible_check(const BilinearAlgebra& alg) {
  return symbolic_property(
      alg, 2,
      [&](const std::vector<SymbolicElement>& a) {
        return difference(alg.multiply(alg.multiply(a[0], a[1]), a[0]), alg.multiply(a[0], alg.multiply(a[1], a[0])));
      },
      [&](const std::vector<RationalVector>& a) {
        return difference(alg.multiply(alg.multiply(a[0], a[1]), a[0]), alg.multiply(a[0], alg.multiply(a[1], a[0])));
      });
}

PropertyCheck fourth_power_check(const BilinearAlgebra& alg) {
  return symbolic_property(
      alg, 1,
      [&](const std::vector<SymbolicElement>& a) {
        auto sq = alg.multiply(a[0], a[0]);
        return difference(alg.multiply(alg.multiply(sq, a[0]), a[0]), alg.multiply(sq, sq));
      },
      [&](const std::vector<RationalVector>& a) {
        auto sq = alg.multiply(a[0], a[0]);
        return difference(alg.multiply(alg.multiply(sq, a[0]), a[0]), alg.multiply(sq, sq));
      });
}

PropertyCheck alternative_check(const BilinearAlgebra& alg) {
  auto sym = [&](const std::vector<SymbolicElement>& a) {
    auto sq = alg.multiply(a[0], a[0]);
    auto left = difference(alg.multiply(sq, a[1]), alg.multiply(a[0], alg.multiply(a[0], a[1])));
    auto right = difference(alg.multiply(alg.multiply(a[1], a[0]), a[0]), alg.multiply(a[1], sq));
    left.insert(left.end(), right.begin(), right.end());
    return left;
  };
  auto num = [&](const std::vector<RationalVector>& a) {
    auto sq = alg.multiply(a[0], a[0]);
    auto left = difference(alg.multiply(sq, a[1]), alg.multiply(a[0], alg.multiply(a[0], a[1])));
    auto right = difference(alg.multiply(alg.multiply(a[1], a[0]), a[0]), alg.multiply(a[1], sq));
    left.insert(left.end(), right.begin(), right.end());
    return left;
  };
  return symbolic_property(alg, 2, sym, num);
}

Subspace::Subspace(std::size_t ambient, const std::vector<RationalVector>& spanning)
    : ambient_(ambient), basis_(row_space_basis(spanning, ambient)) {}

Subspace Subspace::span_of_basis(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<RationalVector> vs;
  for (auto i : indices) {
    RationalVector v(ambient);
    v.at(i) = 1;
    vs.push_back(std::move(v));
  }
  return Subspace(ambient, vs);
}

bool Subspace::contains(const RationalVector& v) const { return in_span(basis_, v, ambient_); }

Subspace product_space(const BilinearAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<RationalVector> products;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) products.push_back(algebra.multiply(u, v));
  return Subspace(algebra.dim(), products);
}

bool is_ideal(const BilinearAlgebra& algebra, const Subspace& s) {
  std::vector<std::size_t> all(algebra.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Subspace whole = Subspace::span_of_basis(algebra.dim(), all);
  for (const auto& u : whole.basis())
    for (const auto& v : s.basis()) {
      if (!s.contains(algebra.multiply(u, v)) || !s.contains(algebra.multiply(v, u))) return false;
    }
  return true;
}

std::vector<std::size_t> SeriesResult::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dimension());
  return out;
}

SeriesResult series(const BilinearAlgebra& lie, SeriesKind kind, std::size_t max_steps) {
  if (!lie.is_antisymmetric()) throw std::invalid_argument("series requires an antisymmetric product");
  std::vector<std::size_t> all(lie.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const Subspace whole = Subspace::span_of_basis(lie.dim(), all);
  SeriesResult out;
  out.terms.push_back(whole);
  for (std::size_t step = 0; step < max_steps; ++step) {
    const Subspace& last = out.terms.back();
    Subspace next = kind == SeriesKind::Derived ? product_space(lie, last, last) : product_space(lie, whole, last);
    bool same = next == last;
    out.terms.push_back(std::move(next));
    if (out.terms.back().dimension() == 0) {
      out.reaches_zero = true;
      break;
    }
    if (same) {
      out.stabilized = true;
      break;
    }
  }
  return out;
}

bool is_heisenberg_ideal(const BilinearAlgebra& lie, const Subspace& s) {
  if (s.dimension() != 3 || !is_ideal(lie, s)) return false;
  Subspace derived = product_space(lie, s, s);
  if (derived.dimension() != 1) return false;
  return product_space(lie, derived, s).dimension() == 0;
}

bool heisenberg_ideal_check(const BilinearAlgebra& lie) {
  if (lie.dim() != 4) return false;
  return is_heisenberg_ideal(lie, Subspace::span_of_basis(4, {0, 1, 3}));
}

AlgebraElement left_inverse(const TwistedAlgebra& algebra, const AlgebraElement& x) {
  RationalVector e(static_cast<std::size_t>(algebra.dim()));
  e[0] = 1;
  return algebra.element(solve(algebra.left_matrix(x), e));
}

AlgebraElement right_inverse(const TwistedAlgebra& algebra, const AlgebraElement& x) {
  RationalVector e(static_cast<std::size_t>(algebra.dim()));
  e[0] = 1;
  return algebra.element(solve(algebra.right_matrix(x), e));
}

ChiralityResult chiral_inverse_check(const TwistedAlgebra& algebra) {
  const auto n = static_cast<std::size_t>(algebra.dim());
  auto vars = component_vars(algebra.dim(), "x");
  PolyMatrix ml = symbolic_left_matrix(lift_constant(algebra.constant(), vars), algebra.group(), vars);
  MultiPoly det = symbolic_det(ml);
  SymbolicElement numerators;
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix m = ml;
    for (std::size_t r = 0; r < n; ++r) m(r, i) = MultiPoly(vars, Rational(r == 0 ? 1 : 0));
    numerators.push_back(symbolic_det(m));
  }
  SymbolicElement x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(MultiPoly::variable(vars, i));
  SymbolicElement check = twisted_product(algebra.constant(), x, numerators);
  check[0] -= det;
  ChiralityResult out;
  if (all_zero(check)) return out;
  out.kind = Chirality::Chiral;
  auto try_point = [&](const AlgebraElement& p) {
    if (determinant(algebra.left_matrix(p)) == 0 || determinant(algebra.right_matrix(p)) == 0) return false;
    auto li = left_inverse(algebra, p);
    auto ri = right_inverse(algebra, p);
    if (li == ri) return false;
    out.witness = p;
    out.left_inverse = li;
    out.right_inverse = ri;
    return true;
  };
  for (int i = 0; i < algebra.dim(); ++i)
    if (try_point(algebra.basis(i))) return out;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    RationalVector v(n);
    for (auto& c : v) c = dist(rng);
    if (!is_zero(v) && try_point(algebra.element(v))) return out;
  }
  return out;
}

bool inner_derivation_check(const TwistedAlgebra& algebra, const AlgebraElement& x) {
  auto bracket = [&](const AlgebraElement& a, const AlgebraElement& b) {
    return algebra.scale(Rational(1, 2), algebra.product(a, b) - algebra.product(b, a));
  };
  for (int i = 0; i < algebra.dim(); ++i)
    for (int j = 0; j < algebra.dim(); ++j) {
      auto y = algebra.basis(i), z = algebra.basis(j);
      auto lhs = bracket(x, algebra.product(y, z));
      auto rhs = algebra.product(bracket(x, y), z) + algebra.product(y, bracket(x, z));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool inner_derivation_check(const BilinearAlgebra& lie, const RationalVector& x) {
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = 0; j < lie.dim(); ++j) {
      RationalVector y(lie.dim()), z(lie.dim());
      y[i] = 1;
      z[j] = 1;
      auto lhs = lie.multiply(x, lie.multiply(y, z));
      auto rhs = lie.multiply(lie.multiply(x, y), z);
      auto extra = lie.multiply(y, lie.multiply(x, z));
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += extra[k];
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace tessera
