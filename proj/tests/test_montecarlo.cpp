#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ancss/analysis.hpp"
#include "ancss/channel.hpp"
#include "ancss/montecarlo.hpp"

using namespace ancss;

TEST_CASE("stop rule validation") {
    CHECK_THROWS_AS((StopRule{0, 100}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((StopRule{200, 100}.validate()), std::invalid_argument);
    StopRule ok;
    ok.validate();
}

TEST_CASE("point estimates are reproducible for a fixed seed") {
    const StopRule stop{50, 200'000};
    const auto a = estimate_point(6.0, 2, 50, stop, 42);
    const auto b = estimate_point(6.0, 2, 50, stop, 42);
    CHECK(a.trials == b.trials);
    CHECK(a.errors == b.errors);
    CHECK(a.ber_hat == b.ber_hat);
    CHECK(a.ci95_halfwidth == b.ci95_halfwidth);

    const auto c = estimate_point(6.0, 2, 50, stop, 43);
    CHECK((c.errors != a.errors || c.trials != a.trials));
}

TEST_CASE("ci halfwidth and rate are consistent with the tallies") {
    const StopRule stop{100, 500'000};
    const auto p = estimate_point(4.0, 4, 50, stop, 7);
    CHECK(p.errors >= 100);
    CHECK(p.ber_hat ==
          static_cast<double>(p.errors) / static_cast<double>(p.trials));
    CHECK(p.ci95_halfwidth ==
          doctest::Approx(1.96 * std::sqrt(p.ber_hat * (1.0 - p.ber_hat) /
                                           static_cast<double>(p.trials))));
    CHECK_FALSE(p.hit_max_trials);
}

TEST_CASE("hopeless points stop at the trial cap with a flag") {
    SUBCASE("noiseless two-user channel is error free") {
        RoundOptions options;
        options.noiseless = true;
        const StopRule stop{10, 50'000};
        const auto p = estimate_point(0.0, 2, 50, stop, 42, options);
        CHECK(p.hit_max_trials);
        CHECK(p.errors == 0);
        CHECK(p.ber_hat == 0.0);
    }
    SUBCASE("40 dB sits far below the reachable error floor at L=2") {
        const StopRule stop{10, 50'000};
        const auto p = estimate_point(40.0, 2, 50, stop, 42);
        CHECK(p.hit_max_trials);
        CHECK(p.errors < 10);
        CHECK(p.trials >= 50'000);
    }
}

TEST_CASE("estimates agree with the analytic value at L=2") {
    const int beta = 100;
    const double ebn0_db = 5.0;
    const StopRule stop{200, 10'000'000};
    const auto p = estimate_point(ebn0_db, 2, beta, stop, 42);
    const double analytic = ber_closed_form(
        beta, decision_variance(beta, ebn0_to_n0(ebn0_db, beta), 2));
    const double se =
        std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(p.trials));
    // the closed form holds E_b at the nominal beta; the realized per-symbol
    // energy fluctuates (std ~ sqrt(beta)), which biases the simulated rate
    // upward by a few percent here, so allow a model band on top of the
    // statistical one
    CHECK(std::fabs(p.ber_hat - analytic) < 3.0 * se + 0.10 * analytic);
}

TEST_CASE("sweep covers the full grid cartesian product") {
    SweepConfig config;
    config.ebn0_grid_db = {2.0};
    config.user_counts = {2};
    config.betas = {50};
    config.stop = {20, 100'000};
    CHECK(run_sweep(config).size() == 1);

    config.ebn0_grid_db = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
    config.user_counts = {2, 4};
    config.betas = {50, 100};
    config.stop = {5, 20'000};
    const auto points = run_sweep(config);
    CHECK(points.size() == 44);

    const auto again = run_sweep(config);
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(points[i].errors == again[i].errors);
        CHECK(points[i].trials == again[i].trials);
    }
}

TEST_CASE("batch tallies merge independently of scheduling granularity") {
    // the same point estimated with different batch sizes covering the same
    // bit budget gives the same total error mass statistically; with the
    // same batch size the tallies must be bit-identical
    const StopRule stop{50, 400'000};
    const auto a = estimate_point(8.0, 2, 50, stop, 11, {}, 10'000);
    const auto b = estimate_point(8.0, 2, 50, stop, 11, {}, 10'000);
    CHECK(a.errors == b.errors);
    CHECK(a.trials == b.trials);
}

TEST_CASE("sweep validation rejects bad configurations") {
    SweepConfig config;
    config.user_counts = {3};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.user_counts = {2};
    config.ebn0_grid_db = {};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}
