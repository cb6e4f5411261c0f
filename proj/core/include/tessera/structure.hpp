#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/expression.hpp"

namespace tessera {

// Finite-dimensional algebra given by its structure tensor: product(i, j) = e_i * e_j.
class BilinearAlgebra {
 public:
  BilinearAlgebra(std::size_t dim, std::vector<RationalVector> table, std::string name = "");

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const RationalVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  RationalVector multiply(const RationalVector& x, const RationalVector& y) const;
  SymbolicElement multiply(const SymbolicElement& x, const SymbolicElement& y) const;

  bool is_antisymmetric() const;
  bool is_symmetric() const;
  bool is_zero() const;

 private:
  std::size_t dim_;
  std::vector<RationalVector> table_;
  std::string name_;
};

// [x,y] = (x.y - y.x)/2
BilinearAlgebra commutator_algebra(const TwistedAlgebra& algebra);
// x o y = (x.y + y.x)/2
BilinearAlgebra anticommutator_algebra(const TwistedAlgebra& algebra);
BilinearAlgebra as_bilinear(const TwistedAlgebra& algebra);

struct PropertyCheck {
  bool holds = false;
  std::vector<RationalVector> counterexample;
};

// Symbolic over generic elements; counterexamples drawn from basis vectors, then small integers.
PropertyCheck jacobi_check(const BilinearAlgebra& lie);
// Residual (x o y) o (x o x) - x o (y o (x o x)) over generic x (x0..) and y (y0..).
struct JordanResult {
  bool holds = false;
  VarNames vars;
  SymbolicElement residual;
  std::vector<RationalVector> counterexample;
};
JordanResult jordan_check(const BilinearAlgebra& jordan);
PropertyCheck flexible_check(const BilinearAlgebra& algebra);
// ((x x) x) x = (x x)(x x)
PropertyCheck fourth_power_check(const BilinearAlgebra& algebra);
// (x x) y = x (x y) and (y x) x = y (x x)
PropertyCheck alternative_check(const BilinearAlgebra& algebra);

// Row-reduced basis of a subspace of Q^n.
class Subspace {
 public:
  Subspace(std::size_t ambient, const std::vector<RationalVector>& spanning);
  static Subspace span_of_basis(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  bool contains(const RationalVector& v) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_;
  std::vector<RationalVector> basis_;
};

// span{ a * b : a in A, b in B }
Subspace product_space(const BilinearAlgebra& algebra, const Subspace& a, const Subspace& b);
bool is_ideal(const BilinearAlgebra& algebra, const Subspace& s);

enum class SeriesKind { Derived, LowerCentral };

struct SeriesResult {
  std::vector<Subspace> terms;
  bool reaches_zero = false;
  bool stabilized = false;
  std::vector<std::size_t> dimensions() const;
};

// Stops on reaching {0}, on stabilization, or after max_steps products.
SeriesResult series(const BilinearAlgebra& lie, SeriesKind kind, std::size_t max_steps = 6);

// S is an ideal, dim S = 3, [S,S] is one-dimensional and central in S.
bool is_heisenberg_ideal(const BilinearAlgebra& lie, const Subspace& s);
// gen{v0, v1, v3}
bool heisenberg_ideal_check(const BilinearAlgebra& lie);

enum class Chirality { TwoSided, Chiral };

struct ChiralityResult {
  Chirality kind = Chirality::TwoSided;
  std::optional<AlgebraElement> witness;
  std::optional<AlgebraElement> left_inverse;
  std::optional<AlgebraElement> right_inverse;
};

// LI(x).x = 1 and x.RI(x) = 1 by linear solves; throws std::domain_error when not invertible.
AlgebraElement left_inverse(const TwistedAlgebra& algebra, const AlgebraElement& x);
AlgebraElement right_inverse(const TwistedAlgebra& algebra, const AlgebraElement& x);
// TwoSided when x.LI(x) = 1 holds symbolically (Cramer numerators over generic x).
ChiralityResult chiral_inverse_check(const TwistedAlgebra& algebra);

// D(y) = [x,y]; returns whether D(y.z) = D(y).z + y.D(z) on all basis pairs of `algebra`.
bool inner_derivation_check(const TwistedAlgebra& algebra, const AlgebraElement& x);
bool inner_derivation_check(const BilinearAlgebra& lie, const RationalVector& x);

}  // namespace tessera
