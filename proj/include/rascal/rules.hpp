#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rascal/cell.hpp"
#include "rascal/numeric.hpp"

namespace rascal {

/// Offset of a neighbor relative to the South cell being determined.
/// drow <= 0 (never below), and (0,0) is not a neighbor of itself.
struct RelativeOffset {
    int drow = 0;
    int dcol = 0;

    auto operator<=>(const RelativeOffset&) const = default;
};

// Compass names used by the text grammar.
inline constexpr RelativeOffset kEast{-1, 0};
inline constexpr RelativeOffset kWest{-1, -1};
inline constexpr RelativeOffset kNorth{-2, -1};
inline constexpr RelativeOffset kNorthWest{-3, -1};

/// Canonical term order: E, W, N, NW, then anything else by
/// (drow descending, dcol descending). Keeps every rendering and
/// inference result deterministic.
struct OffsetOrder {
    bool operator()(const RelativeOffset& a, const RelativeOffset& b) const {
        if (a.drow != b.drow) return a.drow > b.drow;
        return a.dcol > b.dcol;
    }
};

std::optional<RelativeOffset> offset_for_name(std::string_view name);
std::optional<std::string> name_for_offset(RelativeOffset off);

/// An affine neighborhood rule: south = sum(coeff * neighbor) + constant.
/// Coefficients are exact rationals. Zero-coefficient terms are dropped
/// on construction, so structural equality is extensional equality of
/// the stored form.
class AffineDiamondRule {
public:
    using TermMap = std::map<RelativeOffset, Rational, OffsetOrder>;

    /// Throws RuleError if any offset is invalid or the rule is vacuous
    /// (no terms and zero constant).
    AffineDiamondRule(TermMap terms, Rational constant);

    const TermMap& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }

    /// True when every term looks only at already-filled cells during a
    /// row-major fill: drow < 0, or drow == 0 with dcol < 0.
    bool generatable() const;

    std::vector<RelativeOffset> offsets() const;

    bool operator==(const AffineDiamondRule&) const = default;

private:
    TermMap terms_;
    Rational constant_;
};

/// Renders "1*E + 1*W + -1*N + 1". The constant is always printed last,
/// even when zero; offsets without a compass name render as "[dr,dc]".
std::string to_text(const AffineDiamondRule& rule);

/// Parses the text form. Accepts bare directions ("E+W-N+1"), explicit
/// coefficients ("1*E"), rationals ("1/2*E"), and "[dr,dc]" offsets.
/// Throws ParseError on malformed input.
AffineDiamondRule parse_rule_text(std::string_view text);

/// Parses a comma-separated template such as "E,W,N" into distinct
/// offsets. Throws ParseError on unknown names or an empty list.
std::vector<RelativeOffset> parse_offset_list(std::string_view text);

} // namespace rascal
