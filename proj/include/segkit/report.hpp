#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "segkit/approx.hpp"
#include "segkit/cumulative.hpp"
#include "segkit/errors.hpp"
#include "segkit/exact_dp.hpp"
#include "segkit/io.hpp"
#include "segkit/maxseg.hpp"
#include "segkit/penalty.hpp"
#include "segkit/series.hpp"
#include "segkit/synthetic.hpp"

namespace segkit {

enum class Command { Solve, Exact, MaxSeg, Cumulative, CumulativeMax };
enum class PenaltyKind { L2, Range };
enum class OutputFormat { Json, Tsv };

inline PenaltyKind parse_penalty(const std::string& name) {
    if (name == "l2") return PenaltyKind::L2;
    if (name == "range") return PenaltyKind::Range;
    throw UsageError("unknown penalty '" + name + "' (expected l2 or range)");
}

inline const char* command_name(Command c) {
    switch (c) {
        case Command::Solve: return "solve";
        case Command::Exact: return "exact";
        case Command::MaxSeg: return "maxseg";
        case Command::Cumulative: return "cumulative";
        case Command::CumulativeMax: return "cumulative-max";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::Solve;
    std::size_t k = 1;
    double epsilon = 0.1;  // read by solve and cumulative only
    PenaltyKind penalty = PenaltyKind::L2;
    SeedRule seed_rule = SeedRule::MinMaxValue;
    std::optional<std::size_t> row;  // cumulative commands: emit only this prefix row
    bool emit_table = true;          // cumulative commands: include table payloads
};

// One solver run, ready for serialization.  `cost` always equals the
// aggregate (sum or max, per algorithm) of `segment_costs`.
struct RunReport {
    std::string algorithm;
    std::size_t m = 0;
    std::size_t k = 0;
    std::optional<double> epsilon;
    double cost = 0.0;
    std::vector<std::size_t> boundaries;
    std::vector<double> segment_costs;
    double wall_time_ms = 0.0;
    std::uint64_t eval_count = 0;
    std::optional<std::size_t> estimate_iterations;
    // Cumulative extras: one table row s[row, 1..k], or the whole table
    // (rows i = 0..m) when no row restriction was given.
    std::optional<std::size_t> table_row_index;
    std::vector<double> table_row;
    std::vector<std::vector<double>> table;
};

namespace detail {

class WallTimer {
public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <PenaltyFn P>
std::vector<double> table_level_values(const P&, const CumulativeTable& t, std::size_t i) {
    std::vector<double> row(t.levels());
    for (std::size_t level = 1; level <= t.levels(); ++level) {
        row[level - 1] = t.value(i, level);
    }
    return row;
}

}  // namespace detail

// Runs one solver over a prebuilt penalty.  wall_time_ms covers the solve
// and boundary reconstruction; eval_count counts the same span.  The
// segment-cost recomputation happens outside the counter on purpose, so the
// reported aggregate independently cross-checks the solver's cost.
template <PenaltyFn P>
RunReport run_solver(const P& base, const RunConfig& cfg) {
    if (cfg.k < 1) throw UsageError("k must be at least 1");
    RunReport report;
    report.algorithm = command_name(cfg.command);
    report.m = base.num_points();
    report.k = cfg.k;
    const std::size_t m = report.m;

    if (cfg.row && *cfg.row > m) {
        throw InputError("--row " + std::to_string(*cfg.row) + " exceeds series size " +
                         std::to_string(m));
    }

    CountingPenalty<P> p(base);
    Segmentation seg;
    detail::WallTimer timer;
    switch (cfg.command) {
        case Command::Solve: {
            if (!(cfg.epsilon > 0.0)) throw UsageError("epsilon must be positive");
            report.epsilon = cfg.epsilon;
            ApproxOutcome outcome = solve_approx(p, cfg.k, cfg.epsilon, cfg.seed_rule);
            report.wall_time_ms = timer.elapsed_ms();
            seg = std::move(outcome.segmentation);
            report.cost = outcome.cost;
            report.estimate_iterations = outcome.estimate_iterations;
            break;
        }
        case Command::Exact: {
            const CostTable table = bellman_all(p, cfg.k);
            seg = reconstruct(table, m, cfg.k);
            report.wall_time_ms = timer.elapsed_ms();
            report.cost = table.value(m, cfg.k);
            break;
        }
        case Command::MaxSeg: {
            const MaxSegResult ms = ms_fast(p, cfg.k);
            seg = reconstruct_maxseg(p, cfg.k, ms.value);
            report.wall_time_ms = timer.elapsed_ms();
            report.cost = ms.value;
            break;
        }
        case Command::Cumulative: {
            if (!(cfg.epsilon > 0.0)) throw UsageError("epsilon must be positive");
            report.epsilon = cfg.epsilon;
            const CumulativeTable table = all_dp(p, cfg.k, cfg.epsilon);
            const std::size_t row = cfg.row.value_or(m);
            seg = reconstruct_cumulative(table, row, cfg.k);
            report.wall_time_ms = timer.elapsed_ms();
            report.cost = table.value(row, cfg.k);
            if (cfg.emit_table) {
                report.table_row_index = row;
                report.table_row = detail::table_level_values(p, table, row);
            }
            break;
        }
        case Command::CumulativeMax: {
            const AllMsResult res = all_ms(p, cfg.k);
            const std::size_t row = cfg.row.value_or(m);
            const double value = res.table.value(row, cfg.k);
            seg = reconstruct_maxseg(p, cfg.k, value, row);
            report.wall_time_ms = timer.elapsed_ms();
            report.cost = value;
            if (cfg.emit_table) {
                if (cfg.row) {
                    report.table_row_index = row;
                    report.table_row = detail::table_level_values(p, res.table, row);
                } else {
                    report.table.reserve(m + 1);
                    for (std::size_t i = 0; i <= m; ++i) {
                        report.table.push_back(detail::table_level_values(p, res.table, i));
                    }
                }
            }
            break;
        }
    }
    report.eval_count = p.count();
    report.boundaries = seg.boundaries;
    report.segment_costs = segment_costs(base, seg);
    return report;
}

inline RunReport run_on_series(const Series& series, const RunConfig& cfg) {
    if (cfg.penalty == PenaltyKind::L2) {
        return run_solver(L2Penalty(series), cfg);
    }
    return run_solver(RangePenalty(series), cfg);
}

inline nlohmann::ordered_json to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["m"] = r.m;
    j["k"] = r.k;
    if (r.epsilon) j["epsilon"] = *r.epsilon; else j["epsilon"] = nullptr;
    j["cost"] = r.cost;
    j["boundaries"] = r.boundaries;
    j["segment_costs"] = r.segment_costs;
    j["wall_time_ms"] = r.wall_time_ms;
    j["eval_count"] = r.eval_count;
    if (r.estimate_iterations) {
        j["estimate_iterations"] = *r.estimate_iterations;
    } else {
        j["estimate_iterations"] = nullptr;
    }
    if (r.table_row_index) {
        j["table_row_index"] = *r.table_row_index;
        j["table_row"] = r.table_row;
    }
    if (!r.table.empty()) j["table"] = r.table;
    return j;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

template <typename T, typename Fmt>
std::string join(const std::vector<T>& xs, const char* sep, Fmt&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += fmt(xs[i]);
    }
    return out;
}

}  // namespace detail

// Scalar summary as two TSV lines (header + values).  Table payloads are
// JSON-only; boundaries and per-segment costs are comma-joined in one cell.
inline std::string to_tsv(const RunReport& r) {
    std::string header =
        "algorithm\tm\tk\tepsilon\tcost\tboundaries\tsegment_costs\twall_time_ms"
        "\teval_count\testimate_iterations\n";
    std::string line = r.algorithm;
    line += "\t" + std::to_string(r.m);
    line += "\t" + std::to_string(r.k);
    line += "\t" + (r.epsilon ? detail::format_double(*r.epsilon) : std::string());
    line += "\t" + detail::format_double(r.cost);
    line += "\t" + detail::join(r.boundaries, ",",
                                [](std::size_t b) { return std::to_string(b); });
    line += "\t" + detail::join(r.segment_costs, ",", detail::format_double);
    line += "\t" + detail::format_double(r.wall_time_ms);
    line += "\t" + std::to_string(r.eval_count);
    line += "\t" + (r.estimate_iterations ? std::to_string(*r.estimate_iterations)
                                          : std::string());
    line += "\n";
    return header + line;
}

}  // namespace segkit
