#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "segkit/errors.hpp"
#include "segkit/report.hpp"
#include "segkit/series.hpp"
#include "segkit/synthetic.hpp"

namespace segkit {

struct BenchConfig {
    Generator generator = Generator::Step;
    std::uint64_t seed = 1;
    PenaltyKind penalty = PenaltyKind::L2;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> ks;
    std::vector<double> epsilons = {0.1};
    // Any of: exact, solve, maxseg, cumulative, cumulative-max.
    std::vector<std::string> algorithms;
    // Exact is quadratic; refuse to run it above this size.
    std::size_t exact_cap = 20000;
};

namespace detail {

struct BenchMeasurement {
    double wall_time_ms = 0.0;
    std::uint64_t eval_count = 0;
    double cost = 0.0;
};

template <PenaltyFn P>
BenchMeasurement bench_cell(const P& base, const std::string& algorithm, std::size_t k,
                            double epsilon) {
    CountingPenalty<P> p(base);
    BenchMeasurement out;
    WallTimer timer;
    if (algorithm == "exact") {
        out.cost = bellman_all(p, k).value(p.num_points(), k);
    } else if (algorithm == "solve") {
        out.cost = solve_approx(p, k, epsilon).cost;
    } else if (algorithm == "maxseg") {
        out.cost = ms_fast(p, k).value;
    } else if (algorithm == "cumulative") {
        out.cost = all_dp(p, k, epsilon).value(p.num_points(), k);
    } else if (algorithm == "cumulative-max") {
        out.cost = all_ms(p, k).table.value(p.num_points(), k);
    } else {
        throw UsageError("unknown algorithm '" + algorithm + "' in --algorithms");
    }
    out.wall_time_ms = timer.elapsed_ms();
    out.eval_count = p.count();
    return out;
}

inline bool uses_epsilon(const std::string& algorithm) {
    return algorithm == "solve" || algorithm == "cumulative";
}

inline bool sum_objective(const std::string& algorithm) {
    return algorithm == "exact" || algorithm == "solve" || algorithm == "cumulative";
}

}  // namespace detail

// Runs every requested (m, k, epsilon, algorithm) cell on one reproducible
// generated series per size and streams TSV rows.  ratio_vs_exact is filled
// for sum-objective algorithms whenever "exact" is among the requested
// algorithms; min-max costs are left without a ratio because they answer a
// different objective.
inline void run_bench(const BenchConfig& cfg, std::ostream& out) {
    if (cfg.sizes.empty()) throw UsageError("--sizes must list at least one m");
    if (cfg.ks.empty()) throw UsageError("--ks must list at least one k");
    if (cfg.epsilons.empty()) throw UsageError("--epsilons must list at least one value");
    if (cfg.algorithms.empty()) throw UsageError("--algorithms must list at least one solver");
    for (const std::string& a : cfg.algorithms) {
        if (a != "exact" && a != "solve" && a != "maxseg" && a != "cumulative" &&
            a != "cumulative-max") {
            throw UsageError("unknown algorithm '" + a + "' in --algorithms");
        }
    }
    const bool want_exact =
        std::find(cfg.algorithms.begin(), cfg.algorithms.end(), "exact") != cfg.algorithms.end();
    if (want_exact) {
        for (const std::size_t m : cfg.sizes) {
            if (m > cfg.exact_cap) {
                throw UsageError("exact is quadratic and capped at m = " +
                                 std::to_string(cfg.exact_cap) + "; requested m = " +
                                 std::to_string(m) +
                                 " (drop 'exact' or raise --exact-cap)");
            }
        }
    }

    out << "generator\tseed\tm\tk\tepsilon\talgorithm\twall_time_ms\teval_count\tcost"
           "\tratio_vs_exact\n";
    for (const std::size_t m : cfg.sizes) {
        const Series series(generate_series(cfg.generator, cfg.seed, m));
        std::optional<L2Penalty> l2;
        std::optional<RangePenalty> range;
        if (cfg.penalty == PenaltyKind::Range) {
            range.emplace(series);
        } else {
            l2.emplace(series);
        }

        auto run_cell = [&](const std::string& algorithm, std::size_t k, double epsilon) {
            return range ? detail::bench_cell(*range, algorithm, k, epsilon)
                         : detail::bench_cell(*l2, algorithm, k, epsilon);
        };

        for (const std::size_t k : cfg.ks) {
            double exact_cost = 0.0;
            bool have_exact = false;
            auto emit = [&](const std::string& algorithm, double epsilon, bool with_epsilon,
                            const detail::BenchMeasurement& cell) {
                out << generator_name(cfg.generator) << '\t' << cfg.seed << '\t' << m << '\t'
                    << k << '\t'
                    << (with_epsilon ? detail::format_double(epsilon) : std::string()) << '\t'
                    << algorithm << '\t' << detail::format_double(cell.wall_time_ms) << '\t'
                    << cell.eval_count << '\t' << detail::format_double(cell.cost) << '\t';
                if (have_exact && detail::sum_objective(algorithm) && exact_cost != 0.0) {
                    out << detail::format_double(cell.cost / exact_cost);
                } else if (have_exact && detail::sum_objective(algorithm) &&
                           cell.cost == 0.0) {
                    out << detail::format_double(1.0);
                }
                out << '\n';
            };

            if (want_exact) {
                const detail::BenchMeasurement cell = run_cell("exact", k, 0.0);
                exact_cost = cell.cost;
                have_exact = true;
                emit("exact", 0.0, false, cell);
            }
            for (const std::string& algorithm : cfg.algorithms) {
                if (algorithm == "exact") continue;  // already emitted first
                if (detail::uses_epsilon(algorithm)) {
                    for (const double epsilon : cfg.epsilons) {
                        emit(algorithm, epsilon, true, run_cell(algorithm, k, epsilon));
                    }
                } else {
                    emit(algorithm, 0.0, false, run_cell(algorithm, k, 0.0));
                }
            }
        }
    }
}

}  // namespace segkit
