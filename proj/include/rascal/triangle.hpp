#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rascal/cell.hpp"
#include "rascal/numeric.hpp"

namespace rascal {

/// Immutable dense triangular array of exact integers with a name tag.
/// Row n holds exactly n+1 entries. Once constructed a Triangle never
/// changes, so it can be shared freely across readers.
class Triangle {
public:
    /// Validates the shape: at least one row, row n of length n+1.
    Triangle(std::string name, std::vector<std::vector<Int>> rows);

    const std::string& name() const { return name_; }
    std::int64_t num_rows() const { return static_cast<std::int64_t>(rows_.size()); }

    bool contains(Cell c) const {
        return c.in_triangle() && c.row < num_rows();
    }

    /// Exact stored value; throws PositionError outside the extent.
    const Int& at(Cell c) const;

    /// All entries of row n, left to right.
    std::span<const Int> row(std::int64_t n) const;

    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    bool same_rows(const Triangle& other) const { return rows_ == other.rows_; }

private:
    std::string name_;
    std::vector<std::vector<Int>> rows_;
};

/// The four cells of a lattice diamond around a South cell:
/// north = (row-2, col-1), west = (row-1, col-1), east = (row-1, col).
struct DiamondNeighborhood {
    Cell south;
    Cell north;
    Cell west;
    Cell east;

    /// Requires south.row >= 2 and 1 <= south.col <= south.row - 1 so
    /// that all four cells are valid; throws PositionError otherwise.
    static DiamondNeighborhood around(Cell south);
};

} // namespace rascal
