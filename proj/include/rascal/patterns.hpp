#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rascal/triangle.hpp"

namespace rascal {

enum class RingKind { Odd, Even };

/// Descriptor of a diamond ring in the triangular lattice.
///
/// Odd rings are centered on a single cell: level m is the 8m-cell
/// boundary of the diamond with 2m+1 cells per side. Even rings are
/// centered on a 2x2 diamond whose topmost (North) cell is the anchor:
/// level 1 is that inner diamond itself, level m >= 2 the 8m-4 cell
/// boundary with 2m cells per side around it.
struct RingSpec {
    RingKind kind = RingKind::Odd;
    Cell anchor;
    std::int64_t level = 1;
};

/// Cells of the ring in walk order: start at the top corner, then
/// down-left, down-right, up-right and up-left sides; the walk closes
/// back to its start. Throws GeometryError naming the first cell that
/// leaves a triangle of num_rows rows.
std::vector<Cell> ring_cells(const RingSpec& spec, std::int64_t num_rows);

struct Counterexample {
    Cell cell;
    std::string detail; // "expected X, found Y" (+ ring level where relevant)
};

struct PatternReport {
    std::string pattern;
    bool holds = false;
    std::vector<Counterexample> counterexamples; // row-major order
    std::size_t cells_checked = 0;
};

/// "cell (n,k): expected X, found Y" lines, one per counterexample.
std::string format_report(const PatternReport& report);

/// Predicts south = north + first two entries of north's row.
/// Applies for south = (n,k) with n >= 3 and 1 <= k <= n-1; row n-2
/// must be stored. Throws PatternError outside that domain.
Int tmeg_predict(const Triangle& t, Cell south);

/// Checks the prediction against every stored applicable cell.
PatternReport tmeg_verify(const Triangle& t);

/// Predicts south = west + east - nw - (k - 2), where nw = (n-3, k-1)
/// and k indexes the constant-col diagonal of south (k = 0 is the
/// all-ones edge). Applies for n >= 3 and 1 <= k <= n-2.
Int ashley_predict(const Triangle& t, Cell south);

PatternReport ashley_verify(const Triangle& t);

struct RingCheck {
    RingSpec spec;
    Int ring_sum;
    Int reference; // 8m * center (odd) or (2m-1) * inner-diamond sum (even)
    bool holds = false;
};

/// Exact form of the equal-average claim for odd rings:
/// sum(ring) == 8 * level * entry(center).
RingCheck odd_diamond_check(const Triangle& t, Cell center, std::int64_t level);

/// Exact form for even rings (level >= 2):
/// sum(outer ring) == (2*level - 1) * sum(inner diamond).
RingCheck even_diamond_check(const Triangle& t, Cell apex, std::int64_t level);

/// Sweeps every center/apex and every level that fits in the triangle.
PatternReport odd_diamond_verify(const Triangle& t);
PatternReport even_diamond_verify(const Triangle& t);

/// Pascal identity: the diagonal prefix entry(start_row, 0),
/// entry(start_row+1, 1), ..., length terms in all, sums to the entry
/// one row below and one column left of the next diagonal cell,
/// entry(start_row+length, length-1). Exact check; throws
/// PositionError if the stick leaves the extent.
bool hockey_stick_check(const Triangle& t, std::int64_t start_row, std::int64_t length);

} // namespace rascal
