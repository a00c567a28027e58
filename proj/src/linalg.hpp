#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skelsum/rational.hpp"

namespace skelsum::detail {

using Matrix = std::vector<std::vector<Rational>>;

struct Echelon {
  Matrix reduced;                      // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivot_cols; // one per nonzero row
};

/// Gauss-Jordan elimination.
Echelon row_echelon(Matrix rows);

/// Indices of the first maximal linearly independent subset, scanning rows
/// in order.
std::vector<std::size_t> independent_rows(const Matrix& rows);

std::size_t rank(Matrix rows);

/// Solves the square system M x = b; nullopt when M is singular.
std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> b);

/// Multiplies by the lcm of denominators and divides by the gcd of
/// numerators so the vector becomes a primitive integer vector.
void make_primitive(std::vector<Rational>& v);

}  // namespace skelsum::detail
