#include "tessera/determinant.hpp"

#include <stdexcept>

namespace tessera {

MultiPoly symbolic_det(const PolyMatrix& input) {
  if (!input.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return MultiPoly();
  PolyMatrix m = input;
  MultiPoly previous;
  bool have_previous = false;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (!m(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == n) return MultiPoly(m(0, 0).vars());
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        if (have_previous) {
          auto q = divide_exact(num, previous);
          if (!q) throw std::logic_error("Bareiss step is not exact");
          m(i, j) = std::move(*q);
        } else {
          m(i, j) = std::move(num);
        }
      }
    }
    previous = m(k, k);
    have_previous = true;
  }
  MultiPoly det = m(n - 1, n - 1);
  if (sign < 0) det *= Rational(-1);
  return det;
}

MultiPoly laplace_det(const PolyMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 12) throw std::invalid_argument("laplace_det supports at most 12x12");
  // minors[S] = determinant of the first |S| rows restricted to the column set S.
  std::vector<MultiPoly> minors(std::size_t{1} << n);
  VarNames vars;
  for (std::size_t r = 0; r < n && !vars; ++r)
    for (std::size_t c = 0; c < n && !vars; ++c) vars = m(r, c).vars();
  minors[0] = MultiPoly(vars, 1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    MultiPoly acc(vars);
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      std::size_t rest = mask & ~(std::size_t{1} << c);
      // Sign from the number of chosen columns to the right of c.
      int right = __builtin_popcountll(rest >> c);
      MultiPoly term = m(row, c) * minors[rest];
      if (right % 2) acc -= term;
      else acc += term;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

PolyMatrix lift_constant(const StructureConstant& c, const VarNames& vars) {
  const auto n = static_cast<std::size_t>(c.order());
  PolyMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a, b) = MultiPoly(vars, c.values()(a, b));
  return out;
}

PolyMatrix symbolic_left_matrix(const PolyMatrix& constant, const FiniteGroup& group, const VarNames& vars,
                                std::size_t first_var) {
  const int n = group.order();
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a) {
      int b = group.mul(group.inverse(a), c);
      m(static_cast<std::size_t>(c), static_cast<std::size_t>(a)) =
          constant(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).rebase(vars) *
          MultiPoly::variable(vars, first_var + static_cast<std::size_t>(b));
    }
  return m;
}

PolyMatrix symbolic_right_matrix(const PolyMatrix& constant, const FiniteGroup& group, const VarNames& vars,
                                 std::size_t first_var) {
  const int n = group.order();
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      int a = group.mul(c, group.inverse(b));
      m(static_cast<std::size_t>(c), static_cast<std::size_t>(b)) =
          MultiPoly::variable(vars, first_var + static_cast<std::size_t>(a)) *
          constant(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).rebase(vars);
    }
  return m;
}

VarNames component_vars(int n, const std::string& prefix) { return make_vars(prefix, static_cast<std::size_t>(n)); }

MultiPoly det_left(const StructureConstant& c) {
  auto vars = component_vars(c.order());
  return symbolic_det(symbolic_left_matrix(lift_constant(c, vars), c.group(), vars));
}

MultiPoly det_right(const StructureConstant& c) {
  auto vars = component_vars(c.order());
  return symbolic_det(symbolic_right_matrix(lift_constant(c, vars), c.group(), vars));
}

}  // namespace tessera
