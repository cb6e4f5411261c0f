#pragma once

// Reference computations written independently of the library: direct table
// products, Leibniz determinants and numeric identity ranks.

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "tessera/algebra.hpp"
#include "tessera/matrix.hpp"

namespace oracle {

using tessera::Rational;
using tessera::RationalVector;
using Table = std::array<std::array<int, 4>, 4>;

// Z4 sign tables written out row by row (row = left factor).
inline Table tesseranion_table() { return {{{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, 1}}}; }
inline Table z4_table(int alpha, int beta, int delta, int epsilon, int phi, int omega) {
  return {{{1, 1, 1, 1}, {1, 1, 1, alpha}, {1, beta, -1, delta}, {1, epsilon, phi, omega}}};
}

// v_a v_b = T[a][b] v_{(a+b) mod 4}
inline RationalVector z4_product(const Table& t, const RationalVector& x, const RationalVector& y) {
  RationalVector out(4, 0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out[static_cast<std::size_t>((a + b) % 4)] += x[a] * y[b] * t[a][b];
  return out;
}

// Hamilton quaternions on (1, i, j, k).
inline RationalVector hamilton(const RationalVector& p, const RationalVector& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3], p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1], p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

// Sum over permutations; fine for n <= 6.
inline Rational leibniz_det(const tessera::RationalMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Left multiplication matrix of y built straight from a product function: column b is v_b * y.
inline tessera::RationalMatrix left_matrix(const std::function<RationalVector(const RationalVector&, const RationalVector&)>& mul,
                                           const RationalVector& y) {
  std::size_t n = y.size();
  tessera::RationalMatrix m(n, n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    RationalVector e(n, 0);
    e[b] = 1;
    auto col = mul(e, y);
    for (std::size_t r = 0; r < n; ++r) m(r, b) = col[r];
  }
  return m;
}

inline RationalVector random_vector(std::mt19937& rng, std::size_t n, int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  RationalVector v(n);
  for (auto& c : v) c = d(rng);
  return v;
}

inline std::size_t rank(std::vector<RationalVector> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
