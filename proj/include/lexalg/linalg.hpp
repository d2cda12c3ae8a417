#pragma once

// Dense exact linear algebra over Q, for desk-scale oracle checks.

#include "lexalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace lexalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix &m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
RationalMatrix nullspace(RationalMatrix m, std::size_t cols);

} // namespace lexalg
