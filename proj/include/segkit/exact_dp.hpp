#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>

#include "segkit/detail/enumerate.hpp"
#include "segkit/errors.hpp"
#include "segkit/penalty.hpp"
#include "segkit/table.hpp"

namespace segkit {

// Fills the full (prefix, level) table of optimal sum costs:
//   values[i, 1]     = p(0, i)
//   values[i, level] = min_{j <= i} values[j, level-1] + p(j, i)
// Ties go to the largest predecessor j, so reconstruction prefers empty
// trailing segments and reconstruct(0, level) yields all-zero boundaries.
// O(m^2 k) evaluations, O(mk) space.
template <PenaltyFn P>
CostTable bellman_all(const P& p, std::size_t k) {
    if (k < 1) throw ContractViolation("segment count k must be at least 1");
    const std::size_t m = p.num_points();
    CostTable table(m, k, true);
    for (std::size_t i = 0; i <= m; ++i) {
        table.set(i, 1, p.eval(0, i), 0);
    }
    for (std::size_t level = 2; level <= k; ++level) {
        const std::span<const double> prev = table.level_row(level - 1);
        for (std::size_t i = 0; i <= m; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = i;
            for (std::size_t j = 0; j <= i; ++j) {
                const double cost = prev[j] + p.eval(j, i);
                if (cost <= best) {  // <= keeps the largest minimizer
                    best = cost;
                    arg = j;
                }
            }
            table.set(i, level, best, arg);
        }
    }
    return table;
}

// Optimal k-segment sum cost of the prefix (0, prefix], by exhausting all
// C(prefix + k - 1, k - 1) boundary chains.  Test oracle; throws
// BudgetExceeded instead of attempting more than kEnumerationBudget chains.
template <PenaltyFn P>
double brute_force_seg(const P& p, std::size_t k, std::size_t prefix) {
    if (k < 1) throw ContractViolation("segment count k must be at least 1");
    if (prefix > p.num_points()) {
        throw ContractViolation("prefix " + std::to_string(prefix) + " exceeds series size");
    }
    if (detail::segmentation_count(prefix, k) > detail::kEnumerationBudget) {
        throw BudgetExceeded("enumerating k=" + std::to_string(k) + ", prefix=" +
                             std::to_string(prefix) + " exceeds " +
                             std::to_string(detail::kEnumerationBudget) + " chains");
    }
    double best = std::numeric_limits<double>::infinity();
    detail::for_each_segmentation(prefix, k, [&](const std::vector<std::size_t>& b) {
        double total = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            total += p.eval(b[j - 1], b[j]);
        }
        if (total < best) best = total;
    });
    return best;
}

}  // namespace segkit
