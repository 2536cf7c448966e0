#pragma once

#include <cstdint>

#include "rascal/triangle.hpp"

namespace rascal {

/// Pascal's triangle: edges 1, interior south = east + west.
Triangle build_pascal(std::int64_t num_rows);

/// Rascal triangle via the diamond formula
///     south = (east * west + 1) / north
/// using exact integer division. Construction checks the remainder at
/// every interior cell and throws IntegralityError if it is ever
/// nonzero (it never is for the all-ones edge seed).
Triangle build_rascal_diamond(std::int64_t num_rows);

/// Rascal triangle via the additive rule
///     south = east + west - north + 1.
Triangle build_rascal_additive(std::int64_t num_rows);

/// Rascal triangle filled along its diagonals: the constant-col
/// diagonal c is the arithmetic progression starting at 1 in cell
/// (c,c) with common difference c; the mirrored constant-(row-col)
/// family then holds by symmetry.
Triangle build_rascal_diagonal(std::int64_t num_rows);

/// Closed form for the Rascal entry at row n, position k:  k*(n-k) + 1.
/// Independent of the three recurrence generators above.
Int rascal_entry(std::int64_t n, std::int64_t k);

} // namespace rascal
