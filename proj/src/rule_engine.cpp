#include "rascal/rule_engine.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "rascal/errors.hpp"

namespace rascal {

namespace {

bool offsets_inside(const std::vector<RelativeOffset>& offsets, Cell south, std::int64_t num_rows) {
    for (const auto off : offsets) {
        const Cell target{south.row + off.drow, south.col + off.dcol};
        if (!target.in_triangle() || target.row >= num_rows) return false;
    }
    return true;
}

// Incremental reduced row echelon form over exact rationals. Small
// systems only: one column per rule coefficient.
class ExactLinearSystem {
public:
    explicit ExactLinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    enum class Added { Redundant, Independent, Inconsistent };

    // eq holds `unknowns_` coefficients followed by the right-hand side.
    Added add_equation(std::vector<Rational> eq) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (eq[p] == 0) continue;
            const Rational factor = eq[p];
            for (std::size_t j = 0; j <= unknowns_; ++j) eq[j] -= factor * rows_[r][j];
        }
        std::size_t pivot = unknowns_;
        for (std::size_t j = 0; j < unknowns_; ++j) {
            if (eq[j] != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == unknowns_) {
            return eq[unknowns_] == 0 ? Added::Redundant : Added::Inconsistent;
        }
        const Rational lead = eq[pivot];
        for (std::size_t j = 0; j <= unknowns_; ++j) eq[j] /= lead;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r][pivot] == 0) continue;
            const Rational factor = rows_[r][pivot];
            for (std::size_t j = 0; j <= unknowns_; ++j) rows_[r][j] -= factor * eq[j];
        }
        rows_.push_back(std::move(eq));
        pivots_.push_back(pivot);
        return Added::Independent;
    }

    std::size_t rank() const { return rows_.size(); }

    // Unique solution on full rank; otherwise the exact solution with
    // every free unknown pinned to zero.
    std::vector<Rational> solve_free_zero() const {
        std::vector<Rational> solution(unknowns_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            solution[pivots_[r]] = rows_[r][unknowns_];
        }
        return solution;
    }

private:
    std::size_t unknowns_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace

Triangle generate_with_rule(const AffineDiamondRule& rule, std::int64_t num_rows,
                            std::string name) {
    if (num_rows < 1) throw EmptyInputError("rule generation needs at least one row");
    if (!rule.generatable()) {
        throw RuleError("rule " + to_text(rule) + " reads cells not yet filled in row-major order");
    }
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(num_rows));
    for (std::int64_t n = 0; n < num_rows; ++n) {
        std::vector<Int> current(static_cast<std::size_t>(n) + 1);
        current.front() = 1;
        current.back() = 1;
        for (std::int64_t k = 1; k < n; ++k) {
            Rational acc = rule.constant();
            for (const auto& [off, coeff] : rule.terms()) {
                const Cell target{n + off.drow, k + off.dcol};
                if (!target.in_triangle()) {
                    throw RuleError("rule term reaches " + to_string(target) +
                                    ", outside the triangle, at cell " + to_string(Cell{n, k}));
                }
                const Int& value = target.row == n
                                       ? current[static_cast<std::size_t>(target.col)]
                                       : rows[static_cast<std::size_t>(target.row)]
                                             [static_cast<std::size_t>(target.col)];
                acc += coeff * Rational(value);
            }
            if (!is_integer(acc)) {
                const Cell cell{n, k};
                throw IntegralityError(cell, "rule " + to_text(rule) + " yields non-integer " +
                                                 acc.str() + " at cell " + to_string(cell));
            }
            current[static_cast<std::size_t>(k)] = to_integer(acc);
        }
        rows.push_back(std::move(current));
    }
    return Triangle(std::move(name), std::move(rows));
}

RuleReport check_rule(const AffineDiamondRule& rule, const Triangle& t) {
    const auto offsets = rule.offsets();
    RuleReport report;
    for (std::int64_t n = 2; n < t.num_rows(); ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const Cell south{n, k};
            if (!offsets_inside(offsets, south, t.num_rows())) continue;
            Rational expected = rule.constant();
            for (const auto& [off, coeff] : rule.terms()) {
                expected += coeff * Rational(t.at(Cell{n + off.drow, k + off.dcol}));
            }
            const Int& actual = t.at(south);
            ++report.cells_checked;
            if (expected != Rational(actual)) {
                report.violations.push_back(RuleViolation{south, expected, actual});
            }
        }
    }
    if (report.cells_checked == 0) {
        throw RuleError("rule " + to_text(rule) + " applies to no cell of triangle '" +
                        t.name() + "'");
    }
    report.holds = report.violations.empty();
    return report;
}

std::optional<AffineDiamondRule> infer_affine_rule(const Triangle& t,
                                                   const std::vector<RelativeOffset>& template_offsets,
                                                   bool use_constant) {
    if (template_offsets.empty()) throw RuleError("empty rule template");
    std::vector<RelativeOffset> offsets = template_offsets;
    std::sort(offsets.begin(), offsets.end(), OffsetOrder{});
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    for (const auto off : offsets) {
        if (off.drow > 0 || (off.drow == 0 && off.dcol == 0)) {
            throw RuleError("template offset (" + std::to_string(off.drow) + "," +
                            std::to_string(off.dcol) + ") is not a neighbor above the south cell");
        }
    }

    const std::size_t unknowns = offsets.size() + (use_constant ? 1 : 0);
    std::vector<Cell> applicable;
    for (std::int64_t n = 2; n < t.num_rows(); ++n) {
        for (std::int64_t k = 1; k < n; ++k) {
            if (offsets_inside(offsets, Cell{n, k}, t.num_rows())) {
                applicable.push_back(Cell{n, k});
            }
        }
    }
    if (applicable.size() < unknowns) {
        throw RuleError("triangle '" + t.name() + "' supplies only " +
                        std::to_string(applicable.size()) + " sample cells, need " +
                        std::to_string(unknowns));
    }

    ExactLinearSystem system(unknowns);
    for (const Cell south : applicable) {
        std::vector<Rational> eq;
        eq.reserve(unknowns + 1);
        for (const auto off : offsets) {
            eq.emplace_back(t.at(Cell{south.row + off.drow, south.col + off.dcol}));
        }
        if (use_constant) eq.emplace_back(1);
        eq.emplace_back(t.at(south));
        if (system.add_equation(std::move(eq)) == ExactLinearSystem::Added::Inconsistent) {
            return std::nullopt;
        }
        if (system.rank() == unknowns) break;
    }

    const auto solution = system.solve_free_zero();
    AffineDiamondRule::TermMap terms;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (solution[i] != 0) terms[offsets[i]] = solution[i];
    }
    const Rational constant = use_constant ? solution.back() : Rational(0);
    if (terms.empty() && constant == 0) return std::nullopt;

    AffineDiamondRule candidate(std::move(terms), constant);
    if (!check_rule(candidate, t).holds) return std::nullopt;
    return candidate;
}

} // namespace rascal
