#pragma once

// Shared helpers for the test suites: deterministic random data and
// independent reference implementations of the penalties (direct summation,
// no prefix tricks), used to cross-check the O(1) evaluators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi], inclusive.
inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(unit(rng) * static_cast<double>(hi - lo + 1));
}

inline std::vector<double> noise_series(std::mt19937_64& rng, std::size_t m,
                                        double scale = 10.0) {
    std::vector<double> x(m);
    for (double& v : x) v = scale * unit(rng);
    return x;
}

inline std::vector<double> walk_series(std::mt19937_64& rng, std::size_t m) {
    std::vector<double> x(m);
    double value = 0.0;
    for (double& v : x) {
        value += 2.0 * unit(rng) - 1.0;
        v = value;
    }
    return x;
}

inline std::vector<double> step_series(std::mt19937_64& rng, std::size_t m,
                                       std::size_t segments = 4) {
    std::vector<double> x(m);
    std::size_t at = 0;
    for (std::size_t s = 0; s < segments && at < m; ++s) {
        const std::size_t remaining = m - at;
        const std::size_t len =
            (s + 1 == segments) ? remaining : 1 + pick(rng, 0, remaining / 2);
        const double level = 10.0 * unit(rng);
        for (std::size_t i = 0; i < len && at < m; ++i, ++at) {
            x[at] = level + 0.1 * (unit(rng) - 0.5);
        }
    }
    for (; at < m; ++at) x[at] = x[at - 1];
    return x;
}

// Rotates through noise/walk/step so property tests cover distinct shapes.
inline std::vector<double> mixed_series(std::mt19937_64& rng, std::size_t m,
                                        std::size_t variant) {
    switch (variant % 3) {
        case 0: return noise_series(rng, m);
        case 1: return walk_series(rng, m);
        default: return step_series(rng, m);
    }
}

// Sum of squared deviations from the mean, by direct two-pass summation over
// points a..b-1.
inline double l2_direct(const std::vector<double>& x, std::size_t a, std::size_t b) {
    if (b <= a) return 0.0;
    double mean = 0.0;
    for (std::size_t i = a; i < b; ++i) mean += x[i];
    mean /= static_cast<double>(b - a);
    double total = 0.0;
    for (std::size_t i = a; i < b; ++i) total += (x[i] - mean) * (x[i] - mean);
    return total;
}

// (max - min) / 2 by direct scan over points a..b-1.
inline double range_direct(const std::vector<double>& x, std::size_t a, std::size_t b) {
    if (b <= a) return 0.0;
    double lo = x[a];
    double hi = x[a];
    for (std::size_t i = a + 1; i < b; ++i) {
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    return (hi - lo) / 2.0;
}

inline double rel_err(double got, double want) {
    const double scale = std::max({1.0, got < 0 ? -got : got, want < 0 ? -want : want});
    const double diff = got - want;
    return (diff < 0 ? -diff : diff) / scale;
}

}  // namespace testutil
