#pragma once

#include "tessera/algebra.hpp"
#include "tessera/matrix.hpp"
#include "tessera/polynomial.hpp"

namespace tessera {

using PolyMatrix = Matrix<MultiPoly>;

// Fraction-free Bareiss elimination with exact multivariate division.
MultiPoly symbolic_det(const PolyMatrix& m);
// Division-free Laplace expansion over column subsets; independent cross-check.
MultiPoly laplace_det(const PolyMatrix& m);

// Lifts a numeric structure constant to constant polynomials over `vars`.
PolyMatrix lift_constant(const StructureConstant& c, const VarNames& vars);

// M^L and M^R with indeterminate components named by `vars` (one per grade)
// for a structure constant whose entries may themselves be polynomials.
PolyMatrix symbolic_left_matrix(const PolyMatrix& constant, const FiniteGroup& group, const VarNames& vars,
                                std::size_t first_var = 0);
PolyMatrix symbolic_right_matrix(const PolyMatrix& constant, const FiniteGroup& group, const VarNames& vars,
                                 std::size_t first_var = 0);

// det M^L(y) and det M^R(x) as polynomials in y0..y{n-1}.
MultiPoly det_left(const StructureConstant& c);
MultiPoly det_right(const StructureConstant& c);
VarNames component_vars(int n, const std::string& prefix = "y");

}  // namespace tessera
