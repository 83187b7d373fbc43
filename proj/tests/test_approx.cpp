#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "segkit/approx.hpp"
#include "segkit/exact_dp.hpp"
#include "segkit/maxseg.hpp"
#include "segkit/penalty.hpp"
#include "segkit/series.hpp"
#include "support/test_util.hpp"

using segkit::ApproxOutcome;
using segkit::bellman_all;
using segkit::ContractViolation;
using segkit::EstimateResult;
using segkit::estimate;
using segkit::L2Penalty;
using segkit::ms_fast;
using segkit::oracle;
using segkit::OracleResult;
using segkit::SeedRule;
using segkit::Series;
using segkit::solve_approx;
using segkit::sum_cost;

namespace {
const Series kRamp({1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("oracle honors its budget contract on the ramp", "[approx]") {
    const L2Penalty p(kRamp);
    // theta = 1.0 and theta + delta <= u, so feasibility is guaranteed.
    const OracleResult r = oracle(p, 2, 0.5, 1.5);
    REQUIRE(r.feasible);
    CHECK(r.cost <= 1.5);
    CHECK(r.segmentation.boundaries.front() == 0);
    CHECK(r.segmentation.boundaries.back() == 4);
    CHECK(r.cost == sum_cost(p, r.segmentation));
}

TEST_CASE("oracle reports zero cost on constant data", "[approx]") {
    const L2Penalty p(Series({3.0, 3.0, 3.0, 3.0, 3.0}));
    const OracleResult r = oracle(p, 3, 0.25, 2.0);
    REQUIRE(r.feasible);
    CHECK(r.cost == 0.0);
}

TEST_CASE("oracle above budget stays honest", "[approx]") {
    const L2Penalty p(kRamp);
    // theta + delta = 1.01 >> u: infeasible is allowed; a feasible answer
    // must still carry its true recomputed cost.
    const OracleResult r = oracle(p, 2, 0.01, 0.02);
    if (r.feasible) {
        CHECK(r.cost == sum_cost(p, r.segmentation));
    } else {
        CHECK(r.cost == 0.0);
    }
}

TEST_CASE("oracle contract holds on random instances", "[approx]") {
    std::mt19937_64 rng(7301);
    for (int round = 0; round < 30; ++round) {
        const std::size_t m = testutil::pick(rng, 4, 40);
        const std::size_t k = testutil::pick(rng, 1, 4);
        const std::vector<double> x = testutil::noise_series(rng, m);
        const L2Penalty p{Series(x)};
        const double theta = bellman_all(p, k).value(m, k);
        if (theta <= 0.0) continue;
        const double delta = theta * (0.05 + 1.95 * testutil::unit(rng));
        const double u = (theta + delta) * (1.0 + 0.5 * testutil::unit(rng));
        const OracleResult r = oracle(p, k, delta, u);
        REQUIRE(r.feasible);
        CHECK(r.cost <= theta + delta + 1e-9 * std::max(1.0, theta));
        CHECK(segkit::is_valid(r.segmentation, m));
        CHECK(r.segmentation.boundaries.back() == m);
    }
}

TEST_CASE("oracle validates its arguments", "[approx]") {
    const L2Penalty p(kRamp);
    CHECK_THROWS_AS(oracle(p, 2, 0.0, 1.0), ContractViolation);
    CHECK_THROWS_AS(oracle(p, 2, -0.5, 1.0), ContractViolation);
    CHECK_THROWS_AS(oracle(p, 2, 0.5, 0.25), ContractViolation);
    CHECK_THROWS_AS(oracle(p, 0, 0.5, 1.0), ContractViolation);
    // Degenerate ratios are rejected rather than allocating unbounded tables.
    CHECK_THROWS_AS(oracle(p, 2, 1e-12, 1e6), ContractViolation);
}

TEST_CASE("estimate brackets the optimum on the ramp", "[approx]") {
    const L2Penalty p(kRamp);
    const EstimateResult r = estimate(p, 2, 0.5);
    CHECK(r.eta >= 0.5);
    CHECK(r.eta <= 1.0 + 1e-12);
    CHECK(1.0 <= 2.0 * r.eta);

    // Seeding with theta itself succeeds immediately.
    const EstimateResult exact_seed = estimate(p, 2, 1.0);
    CHECK(exact_seed.eta == 1.0);
    CHECK(exact_seed.iterations == 0);
}

TEST_CASE("estimate bracket and iteration bound hold on random instances", "[approx]") {
    std::mt19937_64 rng(7302);
    for (int round = 0; round < 30; ++round) {
        const std::size_t m = testutil::pick(rng, 4, 60);
        const std::size_t k = testutil::pick(rng, 1, 5);
        const std::vector<double> x = testutil::mixed_series(rng, m, round);
        const L2Penalty p{Series(x)};
        const double theta = bellman_all(p, k).value(m, k);
        const double alpha = ms_fast(p, k).value;
        if (alpha <= 0.0 || theta <= 0.0) continue;
        const EstimateResult r = estimate(p, k, alpha);
        CHECK(r.eta <= theta * (1.0 + 1e-9));
        CHECK(theta <= 2.0 * r.eta * (1.0 + 1e-9));
        const double max_iter = std::ceil(std::log(theta / alpha) / std::log(1.5)) + 1.0;
        CHECK(static_cast<double>(r.iterations) <= max_iter);
    }
}

TEST_CASE("estimate validates its seed", "[approx]") {
    const L2Penalty p(kRamp);
    CHECK_THROWS_AS(estimate(p, 2, 0.0), ContractViolation);
    CHECK_THROWS_AS(estimate(p, 2, -1.0), ContractViolation);
}

TEST_CASE("solve_approx achieves the promised ratio on the ramp", "[approx]") {
    const L2Penalty p(kRamp);
    const ApproxOutcome out = solve_approx(p, 2, 0.1);
    CHECK(out.cost >= 1.0);
    CHECK(out.cost <= 1.1);
    CHECK(out.alpha <= out.eta);
    CHECK(out.segmentation.boundaries.back() == 4);
}

TEST_CASE("solve_approx takes the zero-cost shortcut", "[approx]") {
    const L2Penalty p(Series({0.0, 0.0, 0.0, 9.0, 9.0, 9.0}));
    const ApproxOutcome out = solve_approx(p, 2, 0.3);
    CHECK(out.cost == 0.0);
    CHECK(out.eta == 0.0);
    CHECK(out.estimate_iterations == 0);
    CHECK(out.segmentation.boundaries == std::vector<std::size_t>{0, 3, 6});
}

TEST_CASE("solve_approx ratio holds across random instances", "[approx]") {
    std::mt19937_64 rng(7303);
    for (int round = 0; round < 30; ++round) {
        const std::size_t m = testutil::pick(rng, 4, 60);
        const std::size_t k = testutil::pick(rng, 1, 4);
        const double epsilon = 0.25;
        const std::vector<double> x = testutil::mixed_series(rng, m, round);
        const L2Penalty p{Series(x)};
        const double theta = bellman_all(p, k).value(m, k);
        const ApproxOutcome out = solve_approx(p, k, epsilon);
        if (theta == 0.0) {
            CHECK(out.cost == 0.0);
        } else {
            CHECK(out.cost / theta <= 1.0 + epsilon + 1e-9);
        }
        CHECK(out.cost >= theta * (1.0 - 1e-12));
        CHECK(out.alpha <= out.eta);
        const double iter_cap =
            std::ceil(std::log(static_cast<double>(k)) / std::log(1.5)) + 1.0;
        CHECK(static_cast<double>(out.estimate_iterations) <= iter_cap);
    }
}

TEST_CASE("the sum-based seed matches the min-max seed guarantee", "[approx]") {
    std::mt19937_64 rng(7304);
    for (int round = 0; round < 10; ++round) {
        const std::size_t m = testutil::pick(rng, 4, 50);
        const std::size_t k = testutil::pick(rng, 2, 4);
        const std::vector<double> x = testutil::noise_series(rng, m);
        const L2Penalty p{Series(x)};
        const double theta = bellman_all(p, k).value(m, k);
        const ApproxOutcome out = solve_approx(p, k, 0.25, SeedRule::SumOverK);
        if (theta > 0.0) {
            CHECK(out.cost / theta <= 1.25 + 1e-9);
        }
        CHECK(out.alpha <= out.eta);
    }
}

TEST_CASE("solve_approx is scale invariant", "[approx]") {
    std::mt19937_64 rng(7305);
    const std::size_t m = 40;
    const std::size_t k = 3;
    const std::vector<double> x = testutil::noise_series(rng, m);
    const ApproxOutcome base = solve_approx(L2Penalty{Series(x)}, k, 0.1);
    for (const double scale : {1e-30, 1e30}) {
        std::vector<double> y = x;
        for (double& v : y) v *= scale;
        const ApproxOutcome scaled = solve_approx(L2Penalty{Series(y)}, k, 0.1);
        CHECK(scaled.segmentation.boundaries == base.segmentation.boundaries);
        CHECK(scaled.estimate_iterations == base.estimate_iterations);
    }
}

TEST_CASE("solve_approx validates epsilon", "[approx]") {
    const L2Penalty p(kRamp);
    CHECK_THROWS_AS(solve_approx(p, 2, 0.0), ContractViolation);
    CHECK_THROWS_AS(solve_approx(p, 2, -0.1), ContractViolation);
    CHECK_THROWS_AS(solve_approx(p, 0, 0.1), ContractViolation);
}
