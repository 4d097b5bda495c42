#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wentropy/error.hpp"
#include "wentropy/sample.hpp"
#include "wentropy/sampler.hpp"

using namespace wentropy;

namespace {

double ks_statistic(const Distribution& d, std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = d.cdf(x[i]);
        worst = std::max({worst, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    return worst;
}

std::vector<double> draws(const Distribution& d, std::size_t n, std::uint64_t seed, std::uint64_t stream = 0) {
    SeededSampler rng(seed, stream);
    std::vector<double> out;
    draw_n(d, n, rng, out);
    return out;
}

}  // namespace

TEST_CASE("same seed and stream give identical sequences") {
    SeededSampler a(7, 3), b(7, 3);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());

    const auto d = Distribution::exponential(1.0);
    SeededSampler c(99, 0), e(99, 0);
    const auto s1 = sample(d, 5, c);
    const auto s2 = sample(d, 5, e);
    REQUIRE(s1.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(s1[i] == s2[i]);
}

TEST_CASE("distinct streams differ") {
    SeededSampler a(7, 0), b(7, 1), c(8, 0);
    const auto x = a.next_u64();
    CHECK(x != b.next_u64());
    CHECK(x != c.next_u64());
}

TEST_CASE("independent streams are uncorrelated") {
    const auto x = draws(Distribution::uniform(0.0, 1.0), 50000, 5, 0);
    const auto y = draws(Distribution::uniform(0.0, 1.0), 50000, 5, 1);
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - 0.5) * (y[i] - 0.5);
    const double corr = sxy / static_cast<double>(x.size()) * 12.0;
    CHECK(std::abs(corr) < 4.0 / std::sqrt(50000.0));
}

TEST_CASE("uniform stays in the open interval") {
    SeededSampler rng(1, 1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.next_uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("normal moments") {
    SeededSampler rng(11, 0);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.next_normal();
        s += z;
        s2 += z * z;
    }
    CHECK(std::abs(s / n) < 4.0 / std::sqrt(double(n)));
    CHECK(std::abs(s2 / n - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("Weibull draws pass a KS check") {
    for (double p : {0.7, 2.0, 4.0}) {
        const auto d = Distribution::weibull(p);
        CHECK(ks_statistic(d, draws(d, 100000, 2024)) < 0.01);
    }
}

TEST_CASE("gamma draws pass a KS check") {
    for (double q : {0.4, 1.0, 5.0, 7.0}) {
        const auto d = Distribution::gamma(q);
        CHECK(ks_statistic(d, draws(d, 100000, 77)) < 0.01);
    }
}

TEST_CASE("gamma sample mean within three standard errors") {
    for (double q : {0.5, 5.0}) {
        const auto x = draws(Distribution::gamma(q), 1000000, 3);
        double s = 0.0;
        for (double v : x) s += v;
        const double mean = s / static_cast<double>(x.size());
        CHECK(std::abs(mean - q) < 3.0 * std::sqrt(q / 1e6));
    }
}

TEST_CASE("other families sample by inversion") {
    for (const auto& d : {Distribution::exponential(2.0), Distribution::pareto(3.0, 1.0), Distribution::power(2.0, 1.0),
                          Distribution::rayleigh(0.5), Distribution::uniform(1.0, 3.0),
                          Distribution::exponential(1.0).affine(2.0, 1.0)}) {
        INFO(d.to_string());
        CHECK(ks_statistic(d, draws(d, 50000, 13)) < 0.012);
    }
}

TEST_CASE("sample requires n >= 1") {
    SeededSampler rng(1, 0);
    CHECK_THROWS_AS(sample(Distribution::exponential(1.0), 0, rng), Error);
}

TEST_CASE("Sample sorts and validates") {
    const auto s = Sample::from_values({3.0, 1.0, 2.0});
    CHECK(s[0] == 1.0);
    CHECK(s[2] == 3.0);
    CHECK(s.mean() == 2.0);
    CHECK(s.scaled(2.0)[2] == 6.0);
    CHECK_THROWS_AS(Sample::from_values({1.0, -0.5}), Error);
    CHECK_THROWS_AS(Sample::from_values({1.0, std::nan("")}), Error);
    CHECK_THROWS_AS(Sample::from_values({INFINITY}), Error);
}
