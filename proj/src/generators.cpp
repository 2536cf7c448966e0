#include "rascal/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include "rascal/errors.hpp"

namespace rascal {

namespace {

void require_rows(std::int64_t num_rows, const char* what) {
    if (num_rows < 1) {
        throw EmptyInputError(std::string(what) + " needs at least one row");
    }
}

std::vector<Int> edge_row(std::int64_t n) {
    std::vector<Int> row(static_cast<std::size_t>(n) + 1);
    row.front() = 1;
    row.back() = 1;
    return row;
}

} // namespace

Triangle build_pascal(std::int64_t num_rows) {
    require_rows(num_rows, "pascal");
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(num_rows));
    for (std::int64_t n = 0; n < num_rows; ++n) {
        auto row = edge_row(n);
        for (std::int64_t k = 1; k < n; ++k) {
            const auto& above = rows[static_cast<std::size_t>(n - 1)];
            row[static_cast<std::size_t>(k)] =
                above[static_cast<std::size_t>(k - 1)] + above[static_cast<std::size_t>(k)];
        }
        rows.push_back(std::move(row));
    }
    return Triangle("pascal", std::move(rows));
}

Triangle build_rascal_diamond(std::int64_t num_rows) {
    require_rows(num_rows, "rascal-diamond");
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(num_rows));
    for (std::int64_t n = 0; n < num_rows; ++n) {
        auto row = edge_row(n);
        for (std::int64_t k = 1; k < n; ++k) {
            const auto& west = rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
            const auto& east = rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
            const auto& north = rows[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)];
            const Int numerator = east * west + 1;
            Int quotient;
            Int remainder;
            boost::multiprecision::divide_qr(numerator, north, quotient, remainder);
            if (remainder != 0) {
                const Cell cell{n, k};
                throw IntegralityError(cell, "diamond formula leaves remainder " +
                                                 remainder.str() + " at cell " + to_string(cell));
            }
            row[static_cast<std::size_t>(k)] = std::move(quotient);
        }
        rows.push_back(std::move(row));
    }
    return Triangle("rascal-diamond", std::move(rows));
}

Triangle build_rascal_additive(std::int64_t num_rows) {
    require_rows(num_rows, "rascal-additive");
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(num_rows));
    for (std::int64_t n = 0; n < num_rows; ++n) {
        auto row = edge_row(n);
        for (std::int64_t k = 1; k < n; ++k) {
            const auto& west = rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
            const auto& east = rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
            const auto& north = rows[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k)] = east + west - north + 1;
        }
        rows.push_back(std::move(row));
    }
    return Triangle("rascal-additive", std::move(rows));
}

Triangle build_rascal_diagonal(std::int64_t num_rows) {
    require_rows(num_rows, "rascal-diagonal");
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(num_rows));
    for (std::int64_t n = 0; n < num_rows; ++n) {
        rows[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
    }
    // Walk each constant-col diagonal from its seed 1 at (c,c) down-left,
    // adding the common difference c per step.
    for (std::int64_t c = 0; c < num_rows; ++c) {
        Int value = 1;
        for (std::int64_t n = c; n < num_rows; ++n) {
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] = value;
            value += c;
        }
    }
    return Triangle("rascal-diagonal", std::move(rows));
}

Int rascal_entry(std::int64_t n, std::int64_t k) {
    if (!(Cell{n, k}).in_triangle()) {
        throw PositionError("entry " + to_string(Cell{n, k}) + " is not a triangle position");
    }
    return Int(k) * (n - k) + 1;
}

} // namespace rascal
