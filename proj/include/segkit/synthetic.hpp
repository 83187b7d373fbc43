#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "segkit/errors.hpp"

namespace segkit {

enum class Generator { Step, Walk, Noise };

namespace detail {

// mt19937_64 output mapped to [0, 1) explicitly, so generated series are
// bit-identical across platforms and standard libraries.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline Generator parse_generator(const std::string& name) {
    if (name == "step") return Generator::Step;
    if (name == "walk") return Generator::Walk;
    if (name == "noise") return Generator::Noise;
    throw UsageError("unknown generator '" + name + "' (expected step, walk or noise)");
}

inline const char* generator_name(Generator g) {
    switch (g) {
        case Generator::Step: return "step";
        case Generator::Walk: return "walk";
        case Generator::Noise: return "noise";
    }
    return "?";
}

// Reproducible synthetic series for the benchmark harness.
//   step:  piecewise-constant levels in [0, 10) over up to 8 planted
//          segments, plus uniform noise in [-0.1, 0.1).
//   walk:  cumulative sum of uniform steps in [-1, 1).
//   noise: independent uniforms in [0, 10).
inline std::vector<double> generate_series(Generator g, std::uint64_t seed, std::size_t m) {
    if (m < 1) throw ContractViolation("series length m must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<double> x(m);
    switch (g) {
        case Generator::Step: {
            std::vector<std::size_t> cuts;
            for (int c = 0; c < 7; ++c) {
                cuts.push_back(1 + static_cast<std::size_t>(detail::unit_double(rng) *
                                                            static_cast<double>(m - 1)));
            }
            cuts.push_back(m);
            std::sort(cuts.begin(), cuts.end());
            std::size_t at = 0;
            for (const std::size_t cut : cuts) {
                const double level = 10.0 * detail::unit_double(rng);
                for (; at < cut; ++at) {
                    x[at] = level + 0.2 * (detail::unit_double(rng) - 0.5);
                }
            }
            break;
        }
        case Generator::Walk: {
            double value = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                value += 2.0 * detail::unit_double(rng) - 1.0;
                x[i] = value;
            }
            break;
        }
        case Generator::Noise: {
            for (std::size_t i = 0; i < m; ++i) {
                x[i] = 10.0 * detail::unit_double(rng);
            }
            break;
        }
    }
    return x;
}

}  // namespace segkit
