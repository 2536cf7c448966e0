#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rascal/triangle.hpp"

namespace rascal {

/// Diagonal families are named by their invariant coordinate:
/// ConstantCol fixes col, ConstantAnti fixes row - col.
enum class DiagonalFamily { ConstantCol, ConstantAnti };

/// All stored cells of a diagonal, apex-side first.
std::vector<Int> diagonal(const Triangle& t, DiagonalFamily family, std::int64_t index);

struct APProfile {
    Int start;
    Int difference;

    bool operator==(const APProfile&) const = default;
};

/// Profile of an arithmetic progression, or nullopt if the differences
/// are not constant. Throws InsufficientDataError for fewer than two
/// terms.
std::optional<APProfile> ap_profile(std::span<const Int> seq);

struct Representability {
    std::vector<std::int64_t> representable; // ascending
    std::vector<std::int64_t> complement;    // ascending
};

/// Classifies every n <= limit as a*x + b*y with x, y >= 0 by plain
/// enumeration.
Representability representable_values(std::int64_t a_coef, std::int64_t b_coef,
                                      std::int64_t limit);

} // namespace rascal
