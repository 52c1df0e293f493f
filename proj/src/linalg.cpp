#include "lextri/linalg.hpp"

#include <cassert>

namespace lextri {

namespace {

// Reduce m in place to row echelon form; returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> echelon(Mat& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t src = row;
    while (src < m.size() && m[src][col] == 0) ++src;
    if (src == m.size()) continue;
    std::swap(m[row], m[src]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(Mat m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m[0].size();
  return static_cast<int>(echelon(m, ncols).size());
}

Rational determinant(Mat m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t src = col;
    while (src < n && m[src][col] == 0) ++src;
    if (src == n) return Rational(0);
    if (src != col) {
      std::swap(m[col], m[src]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::vector<Vec> kernel_basis(Mat m, std::size_t ncols) {
  std::vector<std::size_t> pivots = echelon(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = -m[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
  const std::size_t rows = a.size();
  const std::size_t ncols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  Mat& aug = a;
  std::vector<std::size_t> pivots = echelon(aug, ncols + 1);
  // A pivot in the rhs column certifies inconsistency.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  Vec x(ncols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

}  // namespace lextri
