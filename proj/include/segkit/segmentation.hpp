#pragma once

#include <cstddef>
#include <vector>

#include "segkit/penalty.hpp"

namespace segkit {

// A boundary chain b_0 = 0 <= b_1 <= ... <= b_k.  Segment j is (b_{j-1}, b_j].
struct Segmentation {
    std::vector<std::size_t> boundaries;

    std::size_t segments() const {
        return boundaries.empty() ? 0 : boundaries.size() - 1;
    }
};

inline bool is_valid(const Segmentation& seg, std::size_t m) {
    if (seg.boundaries.size() < 2 || seg.boundaries.front() != 0) return false;
    for (std::size_t j = 1; j < seg.boundaries.size(); ++j) {
        if (seg.boundaries[j] < seg.boundaries[j - 1]) return false;
    }
    return seg.boundaries.back() <= m;
}

template <PenaltyFn P>
std::vector<double> segment_costs(const P& p, const Segmentation& seg) {
    std::vector<double> costs;
    costs.reserve(seg.segments());
    for (std::size_t j = 1; j < seg.boundaries.size(); ++j) {
        costs.push_back(p.eval(seg.boundaries[j - 1], seg.boundaries[j]));
    }
    return costs;
}

// Left-to-right sum, matching the accumulation order of the solvers.
template <PenaltyFn P>
double sum_cost(const P& p, const Segmentation& seg) {
    double total = 0.0;
    for (std::size_t j = 1; j < seg.boundaries.size(); ++j) {
        total += p.eval(seg.boundaries[j - 1], seg.boundaries[j]);
    }
    return total;
}

template <PenaltyFn P>
double max_cost(const P& p, const Segmentation& seg) {
    double worst = 0.0;
    for (std::size_t j = 1; j < seg.boundaries.size(); ++j) {
        const double c = p.eval(seg.boundaries[j - 1], seg.boundaries[j]);
        if (c > worst) worst = c;
    }
    return worst;
}

}  // namespace segkit
