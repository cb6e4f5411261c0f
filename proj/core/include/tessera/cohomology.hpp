#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tessera/algebra.hpp"

namespace tessera {

// Sign-valued functions on G, G x G and G x G x G, stored as flat tables.
template <int Arity>
class SignFunction {
 public:
  SignFunction(FiniteGroup group, std::vector<int> values) : group_(std::move(group)), values_(std::move(values)) {}

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& values() const { return values_; }

  template <class... Args>
  int operator()(Args... args) const {
    static_assert(sizeof...(Args) == Arity);
    std::size_t idx = 0;
    ((idx = idx * static_cast<std::size_t>(group_.order()) + static_cast<std::size_t>(args)), ...);
    return values_[idx];
  }

  bool is_trivial() const {
    for (int v : values_)
      if (v != 1) return false;
    return true;
  }
  bool operator==(const SignFunction& o) const { return group_ == o.group_ && values_ == o.values_; }

 private:
  FiniteGroup group_;
  std::vector<int> values_;
};

using SignFunction1 = SignFunction<1>;
using SignFunction2 = SignFunction<2>;
using SignFunction3 = SignFunction<3>;

using Triple = std::array<int, 3>;

// r(a,b,c) = C(b,c) C(ab,c)^-1 C(a,bc) C(a,b)^-1; requires a sign-valued unital constant.
SignFunction3 r_function(const StructureConstant& c);
// v_a.(v_b.v_c) = r(a,b,c) (v_a.v_b).v_c for every triple, using algebra products.
bool r_matches_products(const TwistedAlgebra& algebra, const SignFunction3& r);

// q(a,b) = C(a,b) C(b,a)^-1; requires an abelian grading.
SignFunction2 q_function(const StructureConstant& c);
// v_a.v_b = q(a,b) v_b.v_a for every pair.
bool q_matches_products(const TwistedAlgebra& algebra, const SignFunction2& q);

std::optional<Triple> cocycle_violation(const SignFunction2& q);
bool is_2cocycle(const SignFunction2& q);

// Exhaustive search over all 2^|G| sign functions.
std::optional<SignFunction1> find_coboundary_kappa(const SignFunction2& q);
bool is_coboundary_of(const SignFunction2& q, const SignFunction1& kappa);

// q(h,t) q(gh,t)^-1 q(g,t) = 1 fails at the returned (g,h,t).
std::optional<Triple> separability_violation(const SignFunction2& q);
bool is_separable(const SignFunction2& q);

// r(a,b,c) r(c,b,a) = 1 on all triples.
bool reversal_identity(const SignFunction3& r);
// r(a,b,c) r(c,a,b) r(b,c,a) = 1 on all triples.
bool cyclic_identity(const SignFunction3& r);

// (-1)^(num/den); throws std::domain_error unless den divides num.
int parity_sign(long num, long den);

namespace closed_form {
// Klein elements are (n,m) with basis index n + 2m.
SignFunction2 quaternion_constant();
SignFunction2 quaternion_q();
SignFunction1 quaternion_kappa();
SignFunction3 quaternion_r();
SignFunction2 tesseranion_constant();
SignFunction2 tesseranion_q();
SignFunction1 tesseranion_kappa();
SignFunction3 tesseranion_r();
}  // namespace closed_form

SignFunction2 constant_signs(const StructureConstant& c);

}  // namespace tessera
