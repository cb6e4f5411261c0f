#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tessera/rational.hpp"

namespace tessera {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  template <class U = T>
  std::vector<U> apply(const std::vector<U>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    std::vector<U> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      U acc = U();
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce_rows(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
// Basis of {v : m v = 0}, one vector per free column, with a 1 in that column.
std::vector<RationalVector> nullspace(RationalMatrix m);
// Unique solution of m x = b for invertible square m.
RationalVector solve(RationalMatrix m, const RationalVector& b);

// Echelon basis of the span of the given vectors (rows of the result).
std::vector<RationalVector> row_space_basis(const std::vector<RationalVector>& vectors, std::size_t dim);
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v, std::size_t dim);

}  // namespace tessera
