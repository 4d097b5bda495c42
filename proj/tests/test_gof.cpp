#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wentropy/error.hpp"
#include "wentropy/gof.hpp"

using namespace wentropy;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const EntropyOrder kOrder = EntropyOrder::test_default();

TestConfig small_config(std::size_t b = 1000) {
    TestConfig cfg;
    cfg.replications = b;
    cfg.seed = 99;
    cfg.workers = 1;
    return cfg;
}

}  // namespace

TEST_CASE("pinned statistic for a fixed sample") {
    // golden values, cross-checked against an independent numpy evaluation
    const auto s = Sample::from_values({0.12, 0.45, 0.83, 1.1, 0.05, 2.7, 0.61, 0.33, 1.9, 0.98});
    const auto st = statistic(s, kOrder);
    CHECK_THAT(st.lambda_hat, WithinRel(1.1025358324145533, 1e-14));
    CHECK_THAT(st.empirical, WithinRel(0.41808942859935444, 1e-13));
    CHECK_THAT(st.plug_in, WithinRel(1.163094392720738, 1e-13));
    CHECK_THAT(st.D, WithinRel(0.7450049641213836, 1e-13));
    CHECK_THAT(st.T, WithinRel(0.47473194330707186, 1e-13));
}

TEST_CASE("T is scale invariant") {
    SeededSampler rng(4, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const auto s = sample(Distribution::exponential(5.0), 10 + rep, rng);
        const double t = statistic(s, kOrder).T;
        for (double c : {1e-3, 0.2, 5.0, 1e4}) {
            CHECK_THAT(statistic(s.scaled(c), kOrder).T, WithinAbs(t, 1e-12));
        }
    }
}

TEST_CASE("T approaches one on large exponential samples") {
    SeededSampler rng(8, 0);
    const auto s = sample(Distribution::exponential(2.0), 200000, rng);
    CHECK(statistic(s, kOrder).T > 0.95);
}

TEST_CASE("statistic needs two observations") {
    CHECK_THROWS_AS(statistic(Sample::from_values({1.0}), kOrder), Error);
    CHECK_THROWS_AS(statistic(Sample::from_values({0.0, 0.0}), kOrder), Error);
}

TEST_CASE("lower quantile rank") {
    CHECK(lower_quantile_rank(0.05, 10000) == 500);
    CHECK(lower_quantile_rank(0.07, 100) == 7);
    CHECK(lower_quantile_rank(0.0001, 100) == 1);
    CHECK(lower_quantile_rank(0.011, 1000) == 11);
    CHECK(lower_quantile_rank(0.0105, 1000) == 11);
}

TEST_CASE("config validation") {
    TestConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.level = 1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.replications = 99;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("critical table bookkeeping") {
    CriticalTable t;
    t.set(10, 0.05, 0.26);
    t.set(5, 0.10, 0.2);
    t.set(5, 0.01, 0.12);
    t.set(10, 0.05, 0.27);
    CHECK(t.entries().size() == 3);
    CHECK(t.entries().front().n == 5);
    CHECK(t.find(10, 0.05).value() == 0.27);
    CHECK(t.find(10, 0.05 + 1e-14).has_value());
    CHECK_FALSE(t.find(10, 0.01).has_value());
    CHECK(t.sizes() == std::vector<int>{5, 10});
    CHECK(t.monotone_in_level());
    CHECK_THROWS_AS(t.set(4, 0.05, 1.0), Error);
    CHECK_THROWS_AS(t.set(4, 0.05, 0.0), Error);

    CriticalTable bad;
    bad.set(5, 0.05, 0.3);
    bad.set(5, 0.10, 0.2);
    CHECK_FALSE(bad.monotone_in_level());
    bad.set(6, 0.05, 0.25);
    CHECK_FALSE(bad.monotone_in_n(0.01));
    CHECK(bad.monotone_in_n(0.06));
}

TEST_CASE("critical values do not depend on the worker count") {
    const std::vector<int> sizes = {5, 12};
    const std::vector<double> levels = {0.01, 0.05, 0.10};
    auto cfg = small_config(800);
    const auto one = critical_values(sizes, levels, cfg);
    for (unsigned w : {2u, 3u, 8u}) {
        cfg.workers = w;
        CHECK(critical_values(sizes, levels, cfg) == one);
    }
    CHECK(one.monotone_in_level());
    CHECK(one.provenance.seed == 99);
    CHECK(one.provenance.replications == 800);

    cfg.seed = 100;
    CHECK_FALSE(critical_values(sizes, levels, cfg) == one);
}

TEST_CASE("critical value is the k-th order statistic of the null draws") {
    auto cfg = small_config(1000);
    auto null = simulate_null(8, cfg);
    std::sort(null.begin(), null.end());
    const std::vector<int> sizes = {8};
    const std::vector<double> levels = {0.05};
    CHECK(critical_values(sizes, levels, cfg).find(8, 0.05).value() == null[49]);
}

TEST_CASE("run_test decision rule") {
    SeededSampler rng(12, 0);
    const auto s = sample(Distribution::weibull(4.0), 10, rng);
    CriticalTable table;
    table.set(10, 0.05, 0.26026);
    auto cfg = small_config();
    const auto out = run_test(s, cfg, &table);
    CHECK_FALSE(out.simulated_critical_value);
    CHECK(out.critical_value == 0.26026);
    CHECK((out.decision == Decision::Reject) == (out.stat.T < out.critical_value));

    cfg.level = 0.10;
    const auto fallback = run_test(s, cfg, &table);
    CHECK(fallback.simulated_critical_value);

    cfg.simulate_missing = false;
    try {
        run_test(s, cfg, &table);
        FAIL("expected missing entry");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingTableEntry);
    }
    CHECK(to_string(Decision::Reject) == "reject");
    CHECK(to_string(Decision::FailToReject) == "fail-to-reject");
}

TEST_CASE("power study") {
    auto cfg = small_config(2000);
    const std::vector<int> sizes = {10};
    const std::vector<double> levels = {0.05};
    const auto w = power_study(Distribution::weibull(4.0), sizes, levels, cfg);
    REQUIRE(w.size() == 1);
    CHECK(w[0].power > 0.97);
    CHECK_THAT(w[0].standard_error, WithinRel(std::sqrt(w[0].power * (1 - w[0].power) / 2000.0), 1e-12));
    CHECK(w[0].alternative == "weibull(4)");

    cfg.replications = 4000;
    const auto e = power_study(Distribution::exponential(1.0), sizes, levels, cfg);
    CHECK_THAT(e[0].power, WithinAbs(0.05, 0.02));
}

TEST_CASE("power grows with the Weibull shape") {
    auto cfg = small_config(2000);
    const std::vector<int> sizes = {10};
    const std::vector<double> levels = {0.05};
    double last = 0.0;
    for (double p : {2.0, 3.0, 4.0}) {
        const double pw = power_study(Distribution::weibull(p), sizes, levels, cfg)[0].power;
        CHECK(pw + 0.02 >= last);
        last = pw;
    }
}
