#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rascal/rules.hpp"
#include "rascal/triangle.hpp"

namespace rascal {

struct RuleViolation {
    Cell cell;
    Rational expected; // what the rule predicts (may be non-integral)
    Int actual;        // what the triangle stores
};

struct RuleReport {
    bool holds = false;
    std::vector<RuleViolation> violations; // row-major order
    std::size_t cells_checked = 0;
};

/// Fills a triangle row-major from an affine rule: edges fixed to 1,
/// interior cells computed from already-filled neighbors. Throws
/// RuleError if a term reaches outside the triangle at some interior
/// cell and IntegralityError (carrying the cell) if the rule yields a
/// non-integer.
Triangle generate_with_rule(const AffineDiamondRule& rule, std::int64_t num_rows,
                            std::string name = "rule");

/// Evaluates the rule at every interior cell whose neighbors all land
/// inside the triangle; exact comparison, all violations reported.
/// Throws RuleError when no cell is applicable.
RuleReport check_rule(const AffineDiamondRule& rule, const Triangle& t);

/// Infers coefficients over the given offsets (plus a constant when
/// use_constant) that reproduce the triangle exactly. Sample cells are
/// consumed in row-major order until the exact linear system reaches
/// full rank; leftover free coefficients are pinned to zero. The
/// candidate is accepted only if check_rule holds over all applicable
/// cells. Returns nullopt when the samples are inconsistent or the
/// candidate fails validation; throws RuleError when the triangle
/// cannot supply enough sample cells.
std::optional<AffineDiamondRule> infer_affine_rule(const Triangle& t,
                                                   const std::vector<RelativeOffset>& template_offsets,
                                                   bool use_constant);

} // namespace rascal
