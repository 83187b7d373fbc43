#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>

#include "segkit/detail/enumerate.hpp"
#include "segkit/errors.hpp"
#include "segkit/penalty.hpp"
#include "segkit/segmentation.hpp"

namespace segkit {

namespace detail {

// Largest boundary b in [a, m] with p(a, b) <= budget.  Well-defined for any
// budget >= 0 because p(a, a) = 0, and monotone in both a and budget, which
// is what the callers' binary searches rely on.  O(log m) evaluations.
template <PenaltyFn P>
std::size_t furthest(const P& p, std::size_t a, double budget) {
    std::size_t lo = a;
    std::size_t hi = p.num_points();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;  // round up: search for last true
        if (p.eval(a, mid) <= budget) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace detail

// Largest boundary reachable from b with at most k further segments, each of
// cost at most tau.  O(k log m) evaluations.
template <PenaltyFn P>
std::size_t greedy(const P& p, std::size_t b, std::size_t k, double tau) {
    const std::size_t m = p.num_points();
    if (b > m) {
        throw ContractViolation("start boundary " + std::to_string(b) + " outside 0.." +
                                std::to_string(m));
    }
    if (!(tau >= 0.0)) throw ContractViolation("budget tau must be non-negative");
    for (std::size_t hop = 0; hop < k && b < m; ++hop) {
        b = detail::furthest(p, b, tau);
    }
    return b;
}

struct MaxSegResult {
    double value = 0.0;
    // Witness chain realizing `value` as its worst segment; filled by callers
    // that pair ms_fast with reconstruct_maxseg.
    std::optional<Segmentation> boundaries;
};

// Optimal k-segment min-max cost in O(k^2 log^2 m) evaluations.
//
// Walking levels top-down, each round finds the first boundary c >= i from
// which the remaining level-1 greedy hops, budgeted at p(i, c), still reach
// m.  Both the hop start and the budget grow with c, so that predicate is
// monotone in c and always true at c = m, making it binary-searchable.  The
// smallest achievable max cost through this round is then p(i, c), and any
// optimal chain can be assumed to cross c - 1.
template <PenaltyFn P>
MaxSegResult ms_fast(const P& p, std::size_t k) {
    if (k < 1) throw ContractViolation("segment count k must be at least 1");
    const std::size_t m = p.num_points();
    double delta = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    for (std::size_t level = k; level >= 1; --level) {
        std::size_t lo = i;
        std::size_t hi = m;
        while (lo < hi) {  // first c with greedy(c, level-1, p(i, c)) == m
            const std::size_t mid = lo + (hi - lo) / 2;
            if (greedy(p, mid, level - 1, p.eval(i, mid)) == m) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        const std::size_t c = lo;
        delta = std::min(delta, p.eval(i, c));
        if (i == c) return {delta};  // no further progress is possible
        i = c - 1;
    }
    return {delta};
}

// Greedy boundary chain with per-segment budget delta.  When delta is at
// least the optimal min-max value, the chain reaches prefix within k hops
// and its cost is a witness for that budget; otherwise InfeasibleError.
// Boundaries are capped at prefix (p.num_points() by default).
template <PenaltyFn P>
Segmentation reconstruct_maxseg(const P& p, std::size_t k, double delta,
                                std::size_t prefix = std::numeric_limits<std::size_t>::max()) {
    if (k < 1) throw ContractViolation("segment count k must be at least 1");
    if (!(delta >= 0.0)) throw ContractViolation("budget delta must be non-negative");
    const std::size_t m = p.num_points();
    if (prefix == std::numeric_limits<std::size_t>::max()) prefix = m;
    if (prefix > m) {
        throw ContractViolation("prefix " + std::to_string(prefix) + " exceeds series size");
    }
    Segmentation seg;
    seg.boundaries.assign(k + 1, 0);
    std::size_t b = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        b = std::min(detail::furthest(p, b, delta), prefix);
        seg.boundaries[j] = b;
    }
    if (b != prefix) {
        throw InfeasibleError("budget " + std::to_string(delta) + " reaches only boundary " +
                              std::to_string(b) + " of " + std::to_string(prefix) + " with k=" +
                              std::to_string(k) + " segments");
    }
    return seg;
}

// Optimal k-segment min-max cost by exhaustive enumeration.  Test oracle;
// throws BudgetExceeded beyond kEnumerationBudget chains.
template <PenaltyFn P>
double brute_force_maxseg(const P& p, std::size_t k, std::size_t prefix) {
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
        double worst = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            worst = std::max(worst, p.eval(b[j - 1], b[j]));
        }
        if (worst < best) best = worst;
    });
    return best;
}

}  // namespace segkit
