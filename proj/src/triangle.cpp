#include "rascal/triangle.hpp"

#include <utility>

#include "rascal/errors.hpp"

namespace rascal {

Triangle::Triangle(std::string name, std::vector<std::vector<Int>> rows)
    : name_(std::move(name)), rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw EmptyInputError("triangle '" + name_ + "' must have at least one row");
    }
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) {
            throw ShapeError("row " + std::to_string(n) + " has " +
                             std::to_string(rows_[n].size()) + " entries, expected " +
                             std::to_string(n + 1));
        }
    }
}

const Int& Triangle::at(Cell c) const {
    if (!contains(c)) {
        throw PositionError("cell " + to_string(c) + " outside triangle '" + name_ +
                            "' of " + std::to_string(num_rows()) + " rows");
    }
    return rows_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
}

std::span<const Int> Triangle::row(std::int64_t n) const {
    if (n < 0 || n >= num_rows()) {
        throw PositionError("row " + std::to_string(n) + " outside triangle '" + name_ +
                            "' of " + std::to_string(num_rows()) + " rows");
    }
    return rows_[static_cast<std::size_t>(n)];
}

DiamondNeighborhood DiamondNeighborhood::around(Cell south) {
    if (south.row < 2 || south.col < 1 || south.col > south.row - 1) {
        throw PositionError("cell " + to_string(south) +
                            " has no complete diamond neighborhood");
    }
    return DiamondNeighborhood{
        south,
        Cell{south.row - 2, south.col - 1},
        Cell{south.row - 1, south.col - 1},
        Cell{south.row - 1, south.col},
    };
}

} // namespace rascal
