#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace rascal {

/// Position in a triangular array, 0-indexed with the apex at (0,0).
/// A cell is valid when 0 <= col <= row; signed fields keep relative
/// walks (ring geometry, rule offsets) free of unsigned wraparound.
struct Cell {
    std::int64_t row = 0;
    std::int64_t col = 0;

    bool in_triangle() const { return row >= 0 && col >= 0 && col <= row; }

    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline std::ostream& operator<<(std::ostream& os, Cell c) {
    return os << to_string(c);
}

} // namespace rascal
