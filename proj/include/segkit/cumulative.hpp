#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "segkit/detail/indexed_heap.hpp"
#include "segkit/errors.hpp"
#include "segkit/penalty.hpp"
#include "segkit/table.hpp"

namespace segkit {

// Sorted candidate last-segment starts carried between prefixes by all_dp.
// Index 0 is always present; scores live in the previous table level.
struct CandidateSet {
    std::vector<std::size_t> indices;
};

// Triplet-removal pass: scan j from the front; while the triplet
// (a_j, a_{j+1}, a_{j+2}) exists and scores[a_{j+2}] - scores[a_j] <= delta,
// drop the middle element and stay at j; otherwise advance j.  The first and
// last entries always survive.  Keeps consecutive retained scores either
// delta-close or index-adjacent.
inline CandidateSet sparsify(CandidateSet a, double delta, std::span<const double> scores) {
    if (!(delta >= 0.0)) throw ContractViolation("sparsify delta must be non-negative");
    std::vector<std::size_t>& v = a.indices;
    std::size_t j = 0;
    while (j + 2 < v.size()) {
        if (scores[v[j + 2]] - scores[v[j]] <= delta) {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        } else {
            ++j;
        }
    }
    return a;
}

// Largest candidate-set size all_dp may legally reach at `level` after a
// sparsify round.
inline double candidate_bound(std::size_t k, std::size_t level, double epsilon) {
    return 2.0 + 2.0 * (static_cast<double>(k) + static_cast<double>(level) * epsilon) / epsilon;
}

struct AllDpStats {
    std::size_t max_candidates = 0;
    std::uint64_t sparsify_calls = 0;
};

struct AllDpOptions {
    // Throw InternalError if a candidate set ever exceeds candidate_bound().
    bool check_candidate_bound = false;
    AllDpStats* stats = nullptr;
};

// Approximate cumulative sum-cost solver.  Fills s[i, level] for every
// prefix i and level 1..k such that
//     o[i, level] <= s[i, level] <= (1 + epsilon * level / k) * o[i, level]
// where o is the exact optimum.  Level 1 is exact.  For higher levels the
// minimization runs over a sparse candidate set instead of all j <= i:
// after taking the min over the carried candidates, new starts a with
// s[a, level-1] not above the current value are admitted one by one (each
// can only improve the min), and the set is then re-sparsified with
// delta = s[i, level] * epsilon / (k + level * epsilon).  Candidate sets
// stay O(k/epsilon) long, for O(m k^2 / epsilon) evaluations overall.
// Backpointers hold the chosen last-segment start, so every stored value is
// realized by a concrete segmentation.
template <PenaltyFn P>
CumulativeTable all_dp(const P& p, std::size_t k, double epsilon,
                       const AllDpOptions& options = {}) {
    if (k < 1) throw ContractViolation("segment count k must be at least 1");
    if (!(epsilon > 0.0)) throw ContractViolation("epsilon must be positive");
    const std::size_t m = p.num_points();
    CumulativeTable table(m, k, true);
    for (std::size_t i = 0; i <= m; ++i) {
        table.set(i, 1, p.eval(0, i), 0);
    }
    for (std::size_t level = 2; level <= k; ++level) {
        const std::span<const double> prev = table.level_row(level - 1);
        const double bound = candidate_bound(k, level, epsilon);
        CandidateSet cands;
        cands.indices = {0};
        table.set(0, level, 0.0, 0);
        for (std::size_t i = 1; i <= m; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t arg = 0;
            for (const std::size_t a : cands.indices) {
                const double cost = prev[a] + p.eval(a, i);
                if (cost < best) {
                    best = cost;
                    arg = a;
                }
            }
            // Admit fresh starts while their prefix cost alone does not
            // already exceed the running value.
            std::size_t a = cands.indices.back() + 1;
            while (a <= i && prev[a] <= best) {
                const double cost = prev[a] + p.eval(a, i);
                if (cost < best) {
                    best = cost;
                    arg = a;
                }
                cands.indices.push_back(a);
                ++a;
            }
            table.set(i, level, best, arg);
            const double delta = best * epsilon / (static_cast<double>(k) +
                                                   static_cast<double>(level) * epsilon);
            cands = sparsify(std::move(cands), delta, prev);
            if (options.stats != nullptr) {
                options.stats->max_candidates =
                    std::max(options.stats->max_candidates, cands.indices.size());
                ++options.stats->sparsify_calls;
            }
            if (options.check_candidate_bound &&
                static_cast<double>(cands.indices.size()) > bound) {
                throw InternalError("candidate set grew to " +
                                    std::to_string(cands.indices.size()) +
                                    " entries, above the bound " + std::to_string(bound));
            }
        }
    }
    return table;
}

// Boundary reconstruction over an all_dp table; the recomputed sum cost of
// the result equals the stored table value.  Rejects tables built without
// backpointers (all_ms tables hold no realizable chains).
inline Segmentation reconstruct_cumulative(const CumulativeTable& table, std::size_t i,
                                           std::size_t level) {
    return reconstruct(table, i, level);
}

struct AllMsOptions {
    // Track cell writes and throw InternalError on a double write or a cell
    // never written.
    bool verify_writes = false;
};

struct AllMsResult {
    CumulativeTable table;
    std::uint64_t increments = 0;
};

// Exact cumulative min-max solver.  After it returns, table(i, level) is the
// optimal min-max cost of a level-segmentation covering prefix i, for every
// i in 1..m and level in 1..k (prefix-0 rows are zero).
//
// One boundary chain b_1 <= ... <= b_k sweeps left to right, all starting at
// 0, with the fixed sentinel b_{k+1} = m capping the last movable boundary.
// Each round advances the boundary whose advance is cheapest: index j is
// eligible while b_j < b_{j+1}, keyed by eval(b_{j-1}, b_j + 1), smallest
// index on ties.  After incrementing b_l the running worst cost tau absorbs
// the popped key (which equals eval(b_{l-1}, b_l) after the move) and lands
// in table(b_l, l).  Only the entries of l-1 (eligibility), l (key and
// eligibility) and l+1 (key) depend on b_l, so only those heap entries are
// refreshed.  Exactly k*m increments run, each writing one distinct cell;
// O(m k log k) time.
template <PenaltyFn P>
AllMsResult all_ms(const P& p, std::size_t k, const AllMsOptions& options = {}) {
    if (k < 1) throw ContractViolation("segment count k must be at least 1");
    const std::size_t m = p.num_points();
    AllMsResult result{CumulativeTable(m, k, false), 0};
    CumulativeTable& table = result.table;

    std::vector<std::size_t> b(k + 2, 0);
    b[k + 1] = m;  // sentinel
    std::vector<std::uint8_t> written;
    if (options.verify_writes) written.assign(m * k, 0);

    detail::IndexedHeap heap(k);
    // Initially only j = k is eligible: every interior gap b_j < b_{j+1} is
    // zero-width until its right neighbour moves.
    if (b[k] < b[k + 1]) heap.set(k, p.eval(b[k - 1], b[k] + 1));

    double tau = 0.0;
    while (!heap.empty()) {
        const auto [key, l] = heap.top();
        b[l] += 1;
        ++result.increments;
        if (key > tau) tau = key;  // key == eval(b[l-1], b[l]) after the move
        table.set(b[l], l, tau);
        if (options.verify_writes) {
            std::uint8_t& cell = written[(b[l] - 1) * k + (l - 1)];
            if (cell != 0) {
                throw InternalError("cell (" + std::to_string(b[l]) + ", " +
                                    std::to_string(l) + ") written twice");
            }
            cell = 1;
        }
        // Refresh the only heap entries whose key or eligibility involves b_l.
        if (l >= 2 && !heap.contains(l - 1) && b[l - 1] < b[l]) {
            heap.set(l - 1, p.eval(b[l - 2], b[l - 1] + 1));
        }
        if (b[l] < b[l + 1]) {
            heap.set(l, p.eval(b[l - 1], b[l] + 1));
        } else {
            heap.erase(l);
        }
        if (l + 1 <= k && heap.contains(l + 1)) {
            heap.set(l + 1, p.eval(b[l], b[l + 1] + 1));
        }
    }

    if (options.verify_writes) {
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t level = 1; level <= k; ++level) {
                if (written[(i - 1) * k + (level - 1)] == 0) {
                    throw InternalError("cell (" + std::to_string(i) + ", " +
                                        std::to_string(level) + ") never written");
                }
            }
        }
    }
    return result;
}

}  // namespace segkit
