#include "rascal/patterns.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <utility>

#include "rascal/errors.hpp"

namespace rascal {

namespace {

// Side directions of the ring walk: down-left, down-right, up-right,
// up-left. In (row, col) steps.
constexpr std::array<std::pair<int, int>, 4> kSides{{{1, 0}, {1, 1}, {-1, 0}, {-1, -1}}};

std::vector<Cell> walk_ring(Cell top, std::int64_t steps_per_side) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(4 * steps_per_side));
    Cell at = top;
    for (const auto [drow, dcol] : kSides) {
        for (std::int64_t s = 0; s < steps_per_side; ++s) {
            cells.push_back(at);
            at = Cell{at.row + drow, at.col + dcol};
        }
    }
    assert(at == top); // the walk closes
    return cells;
}

void validate_ring(const std::vector<Cell>& cells, std::int64_t num_rows) {
    for (const Cell c : cells) {
        if (!c.in_triangle() || c.row >= num_rows) {
            throw GeometryError("ring cell " + to_string(c) + " lies outside the triangle of " +
                                std::to_string(num_rows) + " rows");
        }
    }
}

Int sum_cells(const Triangle& t, const std::vector<Cell>& cells) {
    Int sum = 0;
    for (const Cell c : cells) sum += t.at(c);
    return sum;
}

std::string expected_found(const Int& expected, const Int& found) {
    return "expected " + expected.str() + ", found " + found.str();
}

// Largest odd-ring level around (row, col), 0 if none fits.
std::int64_t max_odd_level(Cell center, std::int64_t num_rows) {
    const std::int64_t by_top = center.row / 2;
    const std::int64_t by_left = center.col;
    const std::int64_t by_right = center.row - center.col;
    const std::int64_t by_bottom = (num_rows - 1 - center.row) / 2;
    return std::max<std::int64_t>(0, std::min({by_top, by_left, by_right, by_bottom}));
}

// Largest even-ring level for an inner diamond rooted at apex, 1 if
// only the inner diamond fits, 0 if not even that.
std::int64_t max_even_level(Cell apex, std::int64_t num_rows) {
    if (apex.row + 2 >= num_rows || apex.col + 1 > apex.row + 1) return 0;
    const std::int64_t by_top = apex.row / 2 + 1;
    const std::int64_t by_left = apex.col + 1;
    const std::int64_t by_right = apex.row + 1 - apex.col;
    const std::int64_t by_bottom = (num_rows - 1 - apex.row) / 2;
    return std::max<std::int64_t>(1, std::min({by_top, by_left, by_right, by_bottom}));
}

} // namespace

std::vector<Cell> ring_cells(const RingSpec& spec, std::int64_t num_rows) {
    if (spec.level < 1) {
        throw GeometryError("ring level must be at least 1, got " + std::to_string(spec.level));
    }
    std::vector<Cell> cells;
    if (spec.kind == RingKind::Odd) {
        const Cell top{spec.anchor.row - 2 * spec.level, spec.anchor.col - spec.level};
        cells = walk_ring(top, 2 * spec.level);
    } else if (spec.level == 1) {
        const Cell a = spec.anchor;
        cells = {a, Cell{a.row + 1, a.col}, Cell{a.row + 2, a.col + 1}, Cell{a.row + 1, a.col + 1}};
    } else {
        const Cell top{spec.anchor.row - 2 * (spec.level - 1), spec.anchor.col - (spec.level - 1)};
        cells = walk_ring(top, 2 * spec.level - 1);
    }
    validate_ring(cells, num_rows);
    return cells;
}

std::string format_report(const PatternReport& report) {
    std::string out;
    for (const auto& ce : report.counterexamples) {
        out += "cell " + to_string(ce.cell) + ": " + ce.detail + "\n";
    }
    return out;
}

Int tmeg_predict(const Triangle& t, Cell south) {
    const auto [n, k] = south;
    if (n < 3 || k < 1 || k > n - 1 || n - 2 >= t.num_rows()) {
        throw PatternError("tmeg rule does not apply at cell " + to_string(south) +
                           " of triangle '" + t.name() + "'");
    }
    return t.at(Cell{n - 2, k - 1}) + t.at(Cell{n - 2, 0}) + t.at(Cell{n - 2, 1});
}

PatternReport tmeg_verify(const Triangle& t) {
    PatternReport report{.pattern = "tmeg"};
    for (std::int64_t n = 3; n < t.num_rows(); ++n) {
        for (std::int64_t k = 1; k <= n - 1; ++k) {
            const Cell south{n, k};
            const Int predicted = tmeg_predict(t, south);
            const Int& actual = t.at(south);
            ++report.cells_checked;
            if (predicted != actual) {
                report.counterexamples.push_back({south, expected_found(predicted, actual)});
            }
        }
    }
    if (report.cells_checked == 0) {
        throw PatternError("tmeg rule applies to no cell of triangle '" + t.name() + "'");
    }
    report.holds = report.counterexamples.empty();
    return report;
}

Int ashley_predict(const Triangle& t, Cell south) {
    const auto [n, k] = south;
    if (n < 3 || k < 1 || k > n - 2 || n - 1 >= t.num_rows()) {
        throw PatternError("ashley rule does not apply at cell " + to_string(south) +
                           " of triangle '" + t.name() + "'");
    }
    const Int& west = t.at(Cell{n - 1, k - 1});
    const Int& east = t.at(Cell{n - 1, k});
    const Int& nw = t.at(Cell{n - 3, k - 1});
    return west + east - nw - (k - 2);
}

PatternReport ashley_verify(const Triangle& t) {
    PatternReport report{.pattern = "ashley"};
    for (std::int64_t n = 3; n < t.num_rows(); ++n) {
        for (std::int64_t k = 1; k <= n - 2; ++k) {
            const Cell south{n, k};
            const Int predicted = ashley_predict(t, south);
            const Int& actual = t.at(south);
            ++report.cells_checked;
            if (predicted != actual) {
                report.counterexamples.push_back({south, expected_found(predicted, actual)});
            }
        }
    }
    if (report.cells_checked == 0) {
        throw PatternError("ashley rule applies to no cell of triangle '" + t.name() + "'");
    }
    report.holds = report.counterexamples.empty();
    return report;
}

RingCheck odd_diamond_check(const Triangle& t, Cell center, std::int64_t level) {
    const RingSpec spec{RingKind::Odd, center, level};
    const Int sum = sum_cells(t, ring_cells(spec, t.num_rows()));
    const Int reference = 8 * level * t.at(center);
    return RingCheck{spec, sum, reference, sum == reference};
}

RingCheck even_diamond_check(const Triangle& t, Cell apex, std::int64_t level) {
    if (level < 2) {
        throw GeometryError("even diamond check needs an outer ring, level >= 2, got " +
                            std::to_string(level));
    }
    const RingSpec outer{RingKind::Even, apex, level};
    const RingSpec inner{RingKind::Even, apex, 1};
    const Int sum = sum_cells(t, ring_cells(outer, t.num_rows()));
    const Int reference = (2 * level - 1) * sum_cells(t, ring_cells(inner, t.num_rows()));
    return RingCheck{outer, sum, reference, sum == reference};
}

PatternReport odd_diamond_verify(const Triangle& t) {
    PatternReport report{.pattern = "odd-diamond"};
    for (std::int64_t n = 0; n < t.num_rows(); ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            const Cell center{n, k};
            const std::int64_t max_level = max_odd_level(center, t.num_rows());
            for (std::int64_t m = 1; m <= max_level; ++m) {
                const RingCheck check = odd_diamond_check(t, center, m);
                ++report.cells_checked;
                if (!check.holds) {
                    report.counterexamples.push_back(
                        {center, expected_found(check.reference, check.ring_sum) + " at level " +
                                     std::to_string(m)});
                }
            }
        }
    }
    if (report.cells_checked == 0) {
        throw PatternError("no odd diamond ring fits in triangle '" + t.name() + "'");
    }
    report.holds = report.counterexamples.empty();
    return report;
}

PatternReport even_diamond_verify(const Triangle& t) {
    PatternReport report{.pattern = "even-diamond"};
    for (std::int64_t n = 0; n < t.num_rows(); ++n) {
        for (std::int64_t k = 0; k <= n; ++k) {
            const Cell apex{n, k};
            const std::int64_t max_level = max_even_level(apex, t.num_rows());
            for (std::int64_t m = 2; m <= max_level; ++m) {
                const RingCheck check = even_diamond_check(t, apex, m);
                ++report.cells_checked;
                if (!check.holds) {
                    report.counterexamples.push_back(
                        {apex, expected_found(check.reference, check.ring_sum) + " at level " +
                                   std::to_string(m)});
                }
            }
        }
    }
    if (report.cells_checked == 0) {
        throw PatternError("no even diamond ring fits in triangle '" + t.name() + "'");
    }
    report.holds = report.counterexamples.empty();
    return report;
}

bool hockey_stick_check(const Triangle& t, std::int64_t start_row, std::int64_t length) {
    if (length < 1 || start_row < 0 || start_row + length >= t.num_rows()) {
        throw PositionError("hockey stick from row " + std::to_string(start_row) +
                            " of length " + std::to_string(length) +
                            " leaves the triangle extent");
    }
    Int sum = 0;
    for (std::int64_t i = 0; i < length; ++i) {
        sum += t.at(Cell{start_row + i, i});
    }
    return sum == t.at(Cell{start_row + length, length - 1});
}

} // namespace rascal
