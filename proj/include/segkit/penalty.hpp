#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "segkit/errors.hpp"
#include "segkit/series.hpp"

namespace segkit {

// A segment penalty over boundaries 0..num_points().
//
// Required semantics, which every solver in this library relies on:
//   - eval(a, a) == 0 for every boundary a (empty segments are free),
//   - eval(a, b) >= 0,
//   - nesting monotonicity: a' <= a <= b <= b'  implies
//     eval(a, b) <= eval(a', b').
// eval must be O(1) after construction.
template <typename P>
concept PenaltyFn = requires(const P& p, std::size_t a, std::size_t b) {
    { p.eval(a, b) } -> std::convertible_to<double>;
    { p.num_points() } -> std::convertible_to<std::size_t>;
};

namespace detail {

inline void check_segment(std::size_t a, std::size_t b, std::size_t m) {
    if (a > b || b > m) {
        throw ContractViolation("invalid segment (" + std::to_string(a) + ", " +
                                std::to_string(b) + "] for a series of " +
                                std::to_string(m) + " points");
    }
}

}  // namespace detail

// Sum of squared deviations from the segment mean, from prefix sums:
//   eval(a, b) = sum x_i^2 - (sum x_i)^2 / (b - a)   over points a..b-1.
// The subtraction can go slightly negative in floating point on
// near-constant data, so the result is clamped at zero.
class L2Penalty {
public:
    explicit L2Penalty(const Series& series) {
        const std::vector<double>& x = series.points();
        sum_.resize(x.size() + 1, 0.0);
        sumsq_.resize(x.size() + 1, 0.0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            sum_[i + 1] = sum_[i] + x[i];
            sumsq_[i + 1] = sumsq_[i] + x[i] * x[i];
        }
    }

    std::size_t num_points() const { return sum_.size() - 1; }

    double eval(std::size_t a, std::size_t b) const {
        detail::check_segment(a, b, num_points());
        // Empty and single-point segments have exactly zero deviation; skip
        // the prefix-sum difference, whose rounding residue would otherwise
        // report a spurious ~1 ulp cost for one point.
        if (b - a <= 1) return 0.0;
        const double n = static_cast<double>(b - a);
        const double s = sum_[b] - sum_[a];
        const double s2 = sumsq_[b] - sumsq_[a];
        const double cost = s2 - s * s / n;
        return cost > 0.0 ? cost : 0.0;
    }

private:
    std::vector<double> sum_;
    std::vector<double> sumsq_;
};

// Half the value spread of the segment, (max - min) / 2, answered in O(1)
// from sparse tables over power-of-two windows.  Build is O(m log m) time
// and space.
class RangePenalty {
public:
    explicit RangePenalty(const Series& series) : m_(series.size()) {
        const std::vector<double>& x = series.points();
        floor_log2_.resize(m_ + 1, 0);
        for (std::size_t len = 2; len <= m_; ++len) {
            floor_log2_[len] = floor_log2_[len >> 1] + 1;
        }
        const std::size_t levels = static_cast<std::size_t>(floor_log2_[m_]) + 1;
        max_.resize(levels);
        min_.resize(levels);
        max_[0] = x;
        min_[0] = x;
        for (std::size_t j = 1; j < levels; ++j) {
            const std::size_t half = std::size_t{1} << (j - 1);
            const std::size_t rows = m_ - (std::size_t{1} << j) + 1;
            max_[j].resize(rows);
            min_[j].resize(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                max_[j][i] = max_[j - 1][i] > max_[j - 1][i + half] ? max_[j - 1][i]
                                                                    : max_[j - 1][i + half];
                min_[j][i] = min_[j - 1][i] < min_[j - 1][i + half] ? min_[j - 1][i]
                                                                    : min_[j - 1][i + half];
            }
        }
    }

    std::size_t num_points() const { return m_; }

    double eval(std::size_t a, std::size_t b) const {
        detail::check_segment(a, b, m_);
        if (a == b) return 0.0;
        const std::size_t len = b - a;
        const std::size_t j = floor_log2_[len];
        const std::size_t tail = b - (std::size_t{1} << j);
        const double hi = max_[j][a] > max_[j][tail] ? max_[j][a] : max_[j][tail];
        const double lo = min_[j][a] < min_[j][tail] ? min_[j][a] : min_[j][tail];
        return (hi - lo) / 2.0;
    }

private:
    std::size_t m_;
    std::vector<std::uint8_t> floor_log2_;
    std::vector<std::vector<double>> max_;
    std::vector<std::vector<double>> min_;
};

// Forwards eval to a wrapped penalty and counts the calls.  The counter
// belongs to this wrapper instance alone; do not share one instance across
// threads.
template <PenaltyFn P>
class CountingPenalty {
public:
    explicit CountingPenalty(const P& inner) : inner_(&inner) {}

    std::size_t num_points() const { return inner_->num_points(); }

    double eval(std::size_t a, std::size_t b) const {
        ++count_;
        return inner_->eval(a, b);
    }

    std::uint64_t count() const { return count_; }
    void reset() { count_ = 0; }

private:
    const P* inner_;
    mutable std::uint64_t count_ = 0;
};

}  // namespace segkit
