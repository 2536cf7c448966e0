#pragma once

#include <string>
#include <string_view>

#include "rascal/rules.hpp"
#include "rascal/triangle.hpp"

namespace rascal {

/// Canonical triangle document: {"name": ..., "rows": [["1"],["1","1"],...]}.
/// Entries are decimal strings so values of any size survive any
/// consumer. Output is byte-stable for identical triangles.
std::string triangle_to_json(const Triangle& t);

/// Parses and validates a triangle document (shape, decimal entries).
/// Throws ParseError with the reason on any malformed input.
Triangle triangle_from_json(std::string_view text);

/// One row per line, entries comma-separated.
std::string triangle_to_csv(const Triangle& t);

/// Centered fixed-width text layout, one row per line. Every entry is
/// padded to the widest entry (at least min_cell_width); trailing
/// blanks are trimmed.
std::string render_triangle(const Triangle& t, std::size_t min_cell_width = 1);

/// Structured rule form: terms as (drow, dcol, coefficient) triples
/// plus a constant, rationals rendered "p/q".
std::string rule_to_json(const AffineDiamondRule& rule);
AffineDiamondRule rule_from_json(std::string_view text);

} // namespace rascal
