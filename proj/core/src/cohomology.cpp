#include "tessera/cohomology.hpp"

#include <stdexcept>

namespace tessera {

namespace {

int sign_of(const Rational& q) {
  if (q == 1) return 1;
  if (q == -1) return -1;
  throw std::invalid_argument("structure constant is not sign-valued");
}

template <int Arity, class F>
SignFunction<Arity> tabulate(const FiniteGroup& g, F f) {
  const int n = g.order();
  std::vector<int> values;
  if constexpr (Arity == 1) {
    for (int a = 0; a < n; ++a) values.push_back(f(a));
  } else if constexpr (Arity == 2) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) values.push_back(f(a, b));
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) values.push_back(f(a, b, c));
  }
  return SignFunction<Arity>(g, std::move(values));
}

template <class F>
std::optional<Triple> first_triple(int n, F pred) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!pred(a, b, c)) return Triple{a, b, c};
  return std::nullopt;
}

}  // namespace

SignFunction2 constant_signs(const StructureConstant& c) {
  if (!c.is_unital()) throw std::invalid_argument("structure constant is not unital");
  return tabulate<2>(c.group(), [&](int a, int b) { return sign_of(c(a, b)); });
}

SignFunction3 r_function(const StructureConstant& c) {
  auto s = constant_signs(c);
  const auto& g = c.group();
  // Signs are their own inverses.
  return tabulate<3>(g, [&](int a, int b, int d) { return s(b, d) * s(g.mul(a, b), d) * s(a, g.mul(b, d)) * s(a, b); });
}

bool r_matches_products(const TwistedAlgebra& algebra, const SignFunction3& r) {
  const int n = algebra.dim();
  return !first_triple(n, [&](int a, int b, int c) {
    auto lhs = algebra.product(algebra.basis(a), algebra.product(algebra.basis(b), algebra.basis(c)));
    auto rhs = algebra.product(algebra.product(algebra.basis(a), algebra.basis(b)), algebra.basis(c));
    return lhs == algebra.scale(r(a, b, c), rhs);
  });
}

SignFunction2 q_function(const StructureConstant& c) {
  if (!c.group().is_abelian()) throw std::invalid_argument("q-function requires an abelian grading group");
  auto s = constant_signs(c);
  return tabulate<2>(c.group(), [&](int a, int b) { return s(a, b) * s(b, a); });
}

bool q_matches_products(const TwistedAlgebra& algebra, const SignFunction2& q) {
  const int n = algebra.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto ab = algebra.product(algebra.basis(a), algebra.basis(b));
      auto ba = algebra.product(algebra.basis(b), algebra.basis(a));
      if (!(ab == algebra.scale(q(a, b), ba))) return false;
    }
  return true;
}

std::optional<Triple> cocycle_violation(const SignFunction2& q) {
  const auto& g = q.group();
  return first_triple(g.order(), [&](int a, int b, int c) {
    return q(b, c) * q(g.mul(a, b), c) * q(a, g.mul(b, c)) * q(a, b) == 1;
  });
}

bool is_2cocycle(const SignFunction2& q) { return !cocycle_violation(q); }

bool is_coboundary_of(const SignFunction2& q, const SignFunction1& kappa) {
  const auto& g = q.group();
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (q(a, b) != kappa(b) * kappa(g.mul(a, b)) * kappa(a)) return false;
  return true;
}

std::optional<SignFunction1> find_coboundary_kappa(const SignFunction2& q) {
  const int n = q.group().order();
  for (unsigned code = 0; code < (1U << n); ++code) {
    std::vector<int> values;
    for (int a = 0; a < n; ++a) values.push_back((code >> a) & 1U ? -1 : 1);
    SignFunction1 kappa(q.group(), std::move(values));
    if (is_coboundary_of(q, kappa)) return kappa;
  }
  return std::nullopt;
}

std::optional<Triple> separability_violation(const SignFunction2& q) {
  const auto& g = q.group();
  return first_triple(g.order(), [&](int a, int b, int c) { return q(b, c) * q(g.mul(a, b), c) * q(a, c) == 1; });
}

bool is_separable(const SignFunction2& q) { return !separability_violation(q); }

bool reversal_identity(const SignFunction3& r) {
  return !first_triple(r.group().order(), [&](int a, int b, int c) { return r(a, b, c) * r(c, b, a) == 1; });
}

bool cyclic_identity(const SignFunction3& r) {
  return !first_triple(r.group().order(),
                       [&](int a, int b, int c) { return r(a, b, c) * r(c, a, b) * r(b, c, a) == 1; });
}

int parity_sign(long num, long den) {
  if (den == 0 || num % den != 0) throw std::domain_error("closed-form exponent is not an integer");
  long k = num / den;
  return k % 2 == 0 ? 1 : -1;
}

namespace closed_form {

namespace {
const FiniteGroup& klein() {
  static const FiniteGroup g = FiniteGroup::make(GroupName::Z2xZ2);
  return g;
}
const FiniteGroup& z4() {
  static const FiniteGroup g = FiniteGroup::make(GroupName::Z4);
  return g;
}
long n_of(int i) { return i % 2; }
long m_of(int i) { return i / 2; }
}  // namespace

SignFunction2 quaternion_constant() {
  return tabulate<2>(klein(), [](int a, int b) {
    long n = n_of(a), m = m_of(a), n2 = n_of(b), m2 = m_of(b);
    return parity_sign(-(n * n2 + m * (n2 + m2)), 1);
  });
}

SignFunction2 quaternion_q() {
  return tabulate<2>(klein(), [](int a, int b) { return parity_sign(n_of(a) * m_of(b) - n_of(b) * m_of(a), 1); });
}

SignFunction1 quaternion_kappa() {
  return tabulate<1>(klein(), [](int a) { return parity_sign(-n_of(a) * m_of(a), 1); });
}

SignFunction3 quaternion_r() {
  return tabulate<3>(klein(), [](int, int, int) { return 1; });
}

SignFunction2 tesseranion_constant() {
  return tabulate<2>(z4(), [](int a, int b) {
    long n = a, m = b;
    return parity_sign((-2 * n * n + 3 * n - 2 * m * m + m - 3 * n * m + 3) * n * m, 4);
  });
}

SignFunction2 tesseranion_q() {
  return tabulate<2>(z4(), [](int a, int b) {
    long n = a, m = b;
    return parity_sign(n * n * m - n * m * m, 2);
  });
}

SignFunction1 tesseranion_kappa() {
  return tabulate<1>(z4(), [](int a) {
    long n = a;
    return parity_sign(n * n * n + n * n, 2);
  });
}

SignFunction3 tesseranion_r() {
  return tabulate<3>(z4(), [](int a, int b, int c) { return parity_sign(static_cast<long>(a) * b * c, 1); });
}

}  // namespace closed_form

}  // namespace tessera
