#pragma once

#include "lextri/types.hpp"

#include <optional>

namespace lextri {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major, possibly non-square

// Rank by exact Gaussian elimination.
int matrix_rank(Mat m);

// Determinant of a square matrix, exact.
Rational determinant(Mat m);

// Basis of the nullspace { x : m x = 0 }. `ncols` covers the m.empty() case.
std::vector<Vec> kernel_basis(Mat m, std::size_t ncols);

// A particular solution of a x = b (free variables set to 0), or nullopt
// when the system is inconsistent.
std::optional<Vec> solve_linear(Mat a, Vec b);

}  // namespace lextri
