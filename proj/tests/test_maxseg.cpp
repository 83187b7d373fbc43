#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "segkit/maxseg.hpp"
#include "segkit/penalty.hpp"
#include "segkit/series.hpp"
#include "support/test_util.hpp"

using segkit::brute_force_maxseg;
using segkit::ContractViolation;
using segkit::CountingPenalty;
using segkit::greedy;
using segkit::InfeasibleError;
using segkit::L2Penalty;
using segkit::MaxSegResult;
using segkit::ms_fast;
using segkit::RangePenalty;
using segkit::reconstruct_maxseg;
using segkit::Segmentation;
using segkit::Series;

namespace {
const Series kRamp({1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("greedy hops match hand-worked traces", "[maxseg]") {
    const L2Penalty p(kRamp);
    CHECK(greedy(p, 0, 2, 0.5) == 4);   // 0 -> 2 -> 4
    CHECK(greedy(p, 0, 1, 0.5) == 2);
    CHECK(greedy(p, 0, 1, 0.0) == 1);   // only eval(0,1) = 0 fits
    CHECK(greedy(p, 3, 0, 123.0) == 3); // zero hops
    CHECK(greedy(p, 4, 5, 0.0) == 4);   // already at the end
}

TEST_CASE("greedy is monotone in budget and hop count", "[maxseg]") {
    std::mt19937_64 rng(7201);
    const std::size_t m = 40;
    const std::vector<double> x = testutil::walk_series(rng, m);
    const L2Penalty p{Series(x)};
    const double top = p.eval(0, m);
    for (int round = 0; round < 50; ++round) {
        const std::size_t b = testutil::pick(rng, 0, m);
        const std::size_t k = testutil::pick(rng, 0, 5);
        const double tau = top * testutil::unit(rng);
        const double bigger = tau * (1.0 + testutil::unit(rng));
        CHECK(greedy(p, b, k, tau) <= greedy(p, b, k, bigger));
        CHECK(greedy(p, b, k, tau) <= greedy(p, b, k + 1, tau));
        CHECK(greedy(p, b, k, tau) >= b);
    }
}

TEST_CASE("ms_fast matches hand-worked examples", "[maxseg]") {
    const L2Penalty p(kRamp);
    CHECK(ms_fast(p, 2).value == 0.5);
    CHECK(ms_fast(p, 1).value == p.eval(0, 4));
    CHECK(ms_fast(p, 4).value == 0.0);  // one point per segment

    const L2Penalty q(Series({0.0, 0.0, 0.0, 9.0, 9.0, 9.0}));
    CHECK(ms_fast(q, 2).value == 0.0);
}

TEST_CASE("ms_fast equals brute force on random instances", "[maxseg]") {
    std::mt19937_64 rng(7202);
    for (int round = 0; round < 25; ++round) {
        const std::size_t m = testutil::pick(rng, 1, 12);
        const std::size_t k = testutil::pick(rng, 1, 4);
        const std::vector<double> x = testutil::mixed_series(rng, m, round);
        const Series s(x);
        auto check_penalty = [&](const auto& p) {
            CHECK(testutil::rel_err(ms_fast(p, k).value, brute_force_maxseg(p, k, m)) <
                  1e-12);
        };
        if (round % 2 == 0) {
            check_penalty(L2Penalty(s));
        } else {
            check_penalty(RangePenalty(s));
        }
    }
}

TEST_CASE("reconstruct_maxseg realizes the optimal budget", "[maxseg]") {
    const L2Penalty p(kRamp);
    const Segmentation seg = reconstruct_maxseg(p, 2, 0.5);
    CHECK(seg.boundaries == std::vector<std::size_t>{0, 2, 4});
    CHECK(segkit::max_cost(p, seg) == 0.5);
    CHECK_THROWS_AS(reconstruct_maxseg(p, 2, 0.4), InfeasibleError);

    const L2Penalty q(Series({0.0, 0.0, 0.0, 9.0, 9.0, 9.0}));
    CHECK(reconstruct_maxseg(q, 2, 0.0).boundaries == std::vector<std::size_t>{0, 3, 6});
}

TEST_CASE("reconstruct_maxseg honors a prefix cap", "[maxseg]") {
    const L2Penalty p(kRamp);
    const Segmentation seg = reconstruct_maxseg(p, 2, 0.0, 2);
    CHECK(seg.boundaries == std::vector<std::size_t>{0, 1, 2});
    CHECK(segkit::max_cost(p, seg) == 0.0);
    CHECK_THROWS_AS(reconstruct_maxseg(p, 1, 0.0, 2), InfeasibleError);
    CHECK_THROWS_AS(reconstruct_maxseg(p, 2, 0.0, 9), ContractViolation);
}

TEST_CASE("ms_fast value is always realizable", "[maxseg]") {
    std::mt19937_64 rng(7203);
    for (int round = 0; round < 20; ++round) {
        const std::size_t m = testutil::pick(rng, 2, 60);
        const std::size_t k = testutil::pick(rng, 1, 6);
        const std::vector<double> x = testutil::mixed_series(rng, m, round);
        const L2Penalty p{Series(x)};
        const MaxSegResult ms = ms_fast(p, k);
        const Segmentation seg = reconstruct_maxseg(p, k, ms.value);
        CHECK(segkit::is_valid(seg, m));
        CHECK(seg.boundaries.back() == m);
        CHECK(testutil::rel_err(segkit::max_cost(p, seg), ms.value) < 1e-12);
    }
}

TEST_CASE("ms_fast stays within its evaluation budget", "[maxseg]") {
    std::mt19937_64 rng(7204);
    for (const std::size_t m : {64u, 256u, 1024u, 4096u}) {
        const std::vector<double> x = testutil::walk_series(rng, m);
        const L2Penalty base{Series(x)};
        for (const std::size_t k : {1u, 2u, 5u, 10u}) {
            CountingPenalty<L2Penalty> p(base);
            (void)ms_fast(p, k);
            const double logm = std::log2(static_cast<double>(m)) + 1.0;
            const double bound = 4.0 * static_cast<double>(k * k) * logm * logm;
            CHECK(static_cast<double>(p.count()) <= bound);
        }
    }
}

TEST_CASE("maxseg solvers reject bad arguments", "[maxseg]") {
    const L2Penalty p(kRamp);
    CHECK_THROWS_AS(ms_fast(p, 0), ContractViolation);
    CHECK_THROWS_AS(greedy(p, 9, 1, 1.0), ContractViolation);
    CHECK_THROWS_AS(greedy(p, 0, 1, -0.5), ContractViolation);
    CHECK_THROWS_AS(reconstruct_maxseg(p, 0, 1.0), ContractViolation);
    CHECK_THROWS_AS(reconstruct_maxseg(p, 2, -1.0), ContractViolation);
    CHECK_THROWS_AS(brute_force_maxseg(p, 0, 4), ContractViolation);
}
