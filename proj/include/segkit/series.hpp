#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "segkit/errors.hpp"

namespace segkit {

// An immutable sequence of m finite values.
//
// Everything downstream addresses the sequence through integer boundaries
// 0..m.  A segment is a half-open boundary pair (a, b] with 0 <= a <= b <= m
// and covers the points with 0-based indices a..b-1; (a, a] is the empty
// segment.  A k-segmentation is a non-decreasing chain
// b_0 = 0 <= b_1 <= ... <= b_k <= m.
class Series {
public:
    explicit Series(std::vector<double> values) : points_(std::move(values)) {
        if (points_.empty()) {
            throw InputError("series is empty: at least one point is required");
        }
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!std::isfinite(points_[i])) {
                throw InputError("non-finite value at point index " + std::to_string(i));
            }
        }
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<double>& points() const { return points_; }
    double operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<double> points_;
};

}  // namespace segkit
