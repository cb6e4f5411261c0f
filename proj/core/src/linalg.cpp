#include "tessera/matrix.hpp"

namespace tessera {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<std::size_t> reduce_rows(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = m.rows();
    for (std::size_t r = pivot_row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == m.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
    }
    Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return reduce_rows(m).size(); }

Rational determinant(RationalMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == n) return 0;
    if (found != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(found, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::vector<RationalVector> nullspace(RationalMatrix m) {
  auto pivots = reduce_rows(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(RationalMatrix m, const RationalVector& b) {
  if (!m.square() || b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = reduce_rows(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw std::domain_error("solve: singular matrix");
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

std::vector<RationalVector> row_space_basis(const std::vector<RationalVector>& vectors, std::size_t dim) {
  RationalMatrix m(vectors.size(), dim, Rational(0));
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  auto pivots = reduce_rows(m);
  std::vector<RationalVector> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(m.row(r));
  return basis;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v, std::size_t dim) {
  auto extended = basis;
  extended.push_back(v);
  return row_space_basis(extended, dim).size() == row_space_basis(basis, dim).size();
}

}  // namespace tessera
