// segkit command-line front end: ingest a CSV series, run one of the five
// solvers, and emit a JSON or TSV report; or run the benchmark harness.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "segkit/segkit.hpp"

namespace {

struct CliOptions {
    segkit::RunConfig run;
    std::string input_path;
    std::string column;
    std::string penalty = "l2";
    std::string format = "json";
    std::string seed_rule = "minmax";
    // bench
    segkit::BenchConfig bench;
    std::string generator = "step";
    bool is_bench = false;
};

void add_common_options(CLI::App* cmd, CliOptions& opt, bool with_epsilon) {
    cmd->add_option("input", opt.input_path, "CSV file with the series")->required();
    cmd->add_option("--column", opt.column,
                    "column to read: 0-based index or header name (default: single column)");
    cmd->add_option("--k", opt.run.k, "number of segments")->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--penalty", opt.penalty, "segment penalty: l2 or range (default l2)");
    cmd->add_option("--format", opt.format, "output format: json or tsv (default json)");
    if (with_epsilon) {
        cmd->add_option("--epsilon", opt.run.epsilon,
                        "approximation parameter (default 0.1)")
            ->check(CLI::PositiveNumber);
    }
}

int emit_error_and_code(const std::string& kind, const std::string& message, int code) {
    nlohmann::ordered_json err;
    err["error"]["kind"] = kind;
    err["error"]["message"] = message;
    std::cout << err.dump(2) << "\n";
    std::cerr << "segkit: " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence segmentation toolkit"};
    app.require_subcommand(1);
    CliOptions opt;

    CLI::App* solve = app.add_subcommand(
        "solve", "(1+epsilon)-approximate minimum-sum segmentation");
    add_common_options(solve, opt, true);
    solve->add_option("--alpha-seed", opt.seed_rule,
                      "estimate seed: minmax or sum (default minmax)");

    CLI::App* exact = app.add_subcommand(
        "exact", "exact minimum-sum segmentation (quadratic dynamic program)");
    add_common_options(exact, opt, false);

    CLI::App* maxseg = app.add_subcommand(
        "maxseg", "exact minimum of the maximum segment penalty");
    add_common_options(maxseg, opt, false);

    CLI::App* cumulative = app.add_subcommand(
        "cumulative", "approximate minimum-sum costs for every prefix and level");
    add_common_options(cumulative, opt, true);
    std::optional<std::size_t> row;
    cumulative->add_option("--row", row, "emit only the table row for this prefix");

    CLI::App* cumulative_max = app.add_subcommand(
        "cumulative-max", "exact min-max costs for every prefix and level");
    add_common_options(cumulative_max, opt, false);
    cumulative_max->add_option("--row", row, "emit only the table row for this prefix");

    CLI::App* bench = app.add_subcommand(
        "bench", "run solvers over generated series and emit a TSV table");
    bench->add_option("--generator", opt.generator,
                      "series generator: step, walk or noise (default step)");
    bench->add_option("--seed", opt.bench.seed, "generator seed (default 1)");
    bench->add_option("--sizes", opt.bench.sizes, "series lengths m")->required()
        ->delimiter(',');
    bench->add_option("--ks", opt.bench.ks, "segment counts k")->required()
        ->delimiter(',');
    bench->add_option("--epsilons", opt.bench.epsilons,
                      "epsilon values for solve/cumulative (default 0.1)")
        ->delimiter(',');
    bench->add_option("--algorithms", opt.bench.algorithms,
                      "solvers to run: exact, solve, maxseg, cumulative, cumulative-max")
        ->required()->delimiter(',');
    bench->add_option("--penalty", opt.penalty, "segment penalty: l2 or range (default l2)");
    bench->add_option("--exact-cap", opt.bench.exact_cap,
                      "largest m allowed for exact (default 20000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error_and_code("usage", e.what(), 1);
    }

    try {
        if (solve->parsed()) {
            opt.run.command = segkit::Command::Solve;
            if (opt.seed_rule == "minmax") {
                opt.run.seed_rule = segkit::SeedRule::MinMaxValue;
            } else if (opt.seed_rule == "sum") {
                opt.run.seed_rule = segkit::SeedRule::SumOverK;
            } else {
                throw segkit::UsageError("unknown --alpha-seed '" + opt.seed_rule +
                                         "' (expected minmax or sum)");
            }
        } else if (exact->parsed()) {
            opt.run.command = segkit::Command::Exact;
        } else if (maxseg->parsed()) {
            opt.run.command = segkit::Command::MaxSeg;
        } else if (cumulative->parsed()) {
            opt.run.command = segkit::Command::Cumulative;
        } else if (cumulative_max->parsed()) {
            opt.run.command = segkit::Command::CumulativeMax;
        } else {
            opt.is_bench = true;
        }

        if (opt.is_bench) {
            opt.bench.generator = segkit::parse_generator(opt.generator);
            opt.bench.penalty = segkit::parse_penalty(opt.penalty);
            segkit::run_bench(opt.bench, std::cout);
            return 0;
        }

        opt.run.row = row;
        opt.run.penalty = segkit::parse_penalty(opt.penalty);
        if (opt.format != "json" && opt.format != "tsv") {
            throw segkit::UsageError("unknown --format '" + opt.format +
                                     "' (expected json or tsv)");
        }
        const segkit::Series series = segkit::ingest(opt.input_path, opt.column);
        const segkit::RunReport report = segkit::run_on_series(series, opt.run);
        if (opt.format == "json") {
            std::cout << segkit::to_json(report).dump(2) << "\n";
        } else {
            std::cout << segkit::to_tsv(report);
        }
        return 0;
    } catch (const segkit::UsageError& e) {
        return emit_error_and_code("usage", e.what(), 1);
    } catch (const segkit::InputError& e) {
        return emit_error_and_code("input", e.what(), 2);
    } catch (const std::exception& e) {
        return emit_error_and_code("internal", e.what(), 3);
    }
}
