#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace lextri {

namespace bmp = boost::multiprecision;

// Exact arithmetic everywhere: all coordinates, volumes and heights are
// arbitrary-precision rationals kept in lowest terms with positive
// denominator (GMP canonical form). No floating point in the library.
using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

// Point labels are 1-based and fixed at PointSet construction.
using Label = int;

// A cell is a sorted set of point labels.
using Cell = std::vector<Label>;

using Point = std::vector<Rational>;

// Safe construction from a numerator/denominator pair (den may be negative;
// never pass a negative plain int as the denominator of Rational directly).
inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

inline bool cell_contains(const Cell& c, Label k) {
  return std::binary_search(c.begin(), c.end(), k);
}

Cell cell_minus(const Cell& c, Label k);
Cell cell_union(const Cell& c, Label k);
Cell cell_intersect(const Cell& a, const Cell& b);
Cell cell_difference(const Cell& a, const Cell& b);
bool cell_subset(const Cell& sub, const Cell& super);

}  // namespace lextri
