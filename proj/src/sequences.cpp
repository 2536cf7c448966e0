#include "rascal/sequences.hpp"

#include <string>

#include "rascal/errors.hpp"

namespace rascal {

std::vector<Int> diagonal(const Triangle& t, DiagonalFamily family, std::int64_t index) {
    if (index < 0 || index >= t.num_rows()) {
        throw PositionError("diagonal index " + std::to_string(index) +
                            " outside triangle '" + t.name() + "' of " +
                            std::to_string(t.num_rows()) + " rows");
    }
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(t.num_rows() - index));
    for (std::int64_t n = index; n < t.num_rows(); ++n) {
        const std::int64_t k = family == DiagonalFamily::ConstantCol ? index : n - index;
        values.push_back(t.at(Cell{n, k}));
    }
    return values;
}

std::optional<APProfile> ap_profile(std::span<const Int> seq) {
    if (seq.size() < 2) {
        throw InsufficientDataError("arithmetic-progression profile needs at least two terms, got " +
                                    std::to_string(seq.size()));
    }
    const Int difference = seq[1] - seq[0];
    for (std::size_t i = 2; i < seq.size(); ++i) {
        if (seq[i] - seq[i - 1] != difference) return std::nullopt;
    }
    return APProfile{seq[0], difference};
}

Representability representable_values(std::int64_t a_coef, std::int64_t b_coef,
                                      std::int64_t limit) {
    if (a_coef < 1 || b_coef < 1) {
        throw Error("coefficients must be positive, got " + std::to_string(a_coef) + " and " +
                    std::to_string(b_coef));
    }
    if (limit < 0) {
        throw Error("limit must be non-negative, got " + std::to_string(limit));
    }
    std::vector<bool> reachable(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t a = 0; a * a_coef <= limit; ++a) {
        for (std::int64_t b = 0; a * a_coef + b * b_coef <= limit; ++b) {
            reachable[static_cast<std::size_t>(a * a_coef + b * b_coef)] = true;
        }
    }
    Representability result;
    for (std::int64_t n = 0; n <= limit; ++n) {
        (reachable[static_cast<std::size_t>(n)] ? result.representable : result.complement)
            .push_back(n);
    }
    return result;
}

} // namespace rascal
