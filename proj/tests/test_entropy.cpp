#include "catch_amalgamated.hpp"

#include <cmath>
#include <vector>

#include "wentropy/entropy.hpp"
#include "wentropy/error.hpp"
#include "wentropy/moments.hpp"
#include "wentropy/verify.hpp"

using namespace wentropy;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

QuadratureConfig forced() {
    QuadratureConfig q;
    q.allow_closed_form = false;
    return q;
}

const EntropyOrder kOrder = EntropyOrder::test_default();

}  // namespace

TEST_CASE("order validation") {
    CHECK(EntropyOrder::is_valid(0.26, 1.25));
    CHECK(EntropyOrder::is_valid(1.5, 2.0));
    CHECK_FALSE(EntropyOrder::is_valid(0.5, 0.9));   // beta < 1
    CHECK_FALSE(EntropyOrder::is_valid(0.2, 1.25));  // alpha <= beta - 1
    CHECK_FALSE(EntropyOrder::is_valid(1.25, 1.25)); // alpha == beta
    CHECK_FALSE(EntropyOrder::is_valid(std::nan(""), 1.5));
    try {
        EntropyOrder::make(2.0, 1.5);
        FAIL("expected invalid order");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidOrder);
    }
    const auto o = EntropyOrder::make(0.26, 1.25);
    CHECK_THAT(o.gamma(), WithinAbs(0.51, 1e-15));
    CHECK_THAT(o.delta(), WithinAbs(0.99, 1e-15));
}

TEST_CASE("gwse closed forms") {
    const double g = kOrder.gamma(), dl = kOrder.delta();
    CHECK_THAT(gwse(Distribution::exponential(1.0), kOrder).value, WithinRel(2.0 / 0.99 * std::log(1.0 / 0.51), 1e-12));
    CHECK_THAT(gwse(Distribution::exponential(1.0), kOrder, forced()).value,
               WithinRel(2.0 / 0.99 * std::log(1.0 / 0.51), 1e-9));
    CHECK_THAT(gwse(Distribution::exponential(2.5), kOrder).value, WithinRel(-2.0 * std::log(2.5 * g) / dl, 1e-12));

    const auto o = EntropyOrder::make(1.2, 2.0);  // gamma 2.2, so a gamma > 2 for a = 3
    CHECK_THAT(gwse(Distribution::pareto(3.0, 1.5), o).value,
               WithinRel(std::log(2.25 / (3.0 * 2.2 - 2.0)) / 0.8, 1e-12));
    CHECK_THAT(gwse(Distribution::pareto(3.0, 1.5), o, forced()).value,
               WithinRel(std::log(2.25 / (3.0 * 2.2 - 2.0)) / 0.8, 1e-9));
}

TEST_CASE("gwse diverges when a gamma <= 2") {
    try {
        gwse(Distribution::pareto(3.0, 1.0), kOrder);
        FAIL("expected divergence");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Divergence);
    }
}

TEST_CASE("gwfe closed forms") {
    const double g = kOrder.gamma(), dl = kOrder.delta();
    CHECK_THAT(gwfe(Distribution::uniform(0.0, 3.0), kOrder).value, WithinRel(std::log(9.0 / (g + 2.0)) / dl, 1e-12));
    CHECK_THAT(gwfe(Distribution::power(2.0, 1.0), kOrder).value, WithinRel(std::log(1.0 / (2.0 * g + 2.0)) / dl, 1e-12));
    CHECK_THAT(gwfe(Distribution::power(2.0, 1.0), kOrder, forced()).value,
               WithinRel(std::log(1.0 / (2.0 * g + 2.0)) / dl, 1e-9));
    // uniform(0,1): log(1/(alpha + beta + 1)) / (beta - alpha)
    const auto o = EntropyOrder::make(0.8, 1.5);
    CHECK_THAT(gwfe(Distribution::uniform(0.0, 1.0), o, forced()).value, WithinRel(std::log(1.0 / 3.3) / 0.7, 1e-9));
}

TEST_CASE("gwfe refuses unbounded support") {
    try {
        gwfe(Distribution::exponential(1.0), kOrder);
        FAIL("expected divergence");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Divergence);
    }
}

TEST_CASE("unweighted measures") {
    const double g = kOrder.gamma(), dl = kOrder.delta();
    const auto o = EntropyOrder::make(0.7, 1.3);
    // uniform(a,b): log((b - a)/(alpha + beta)) / (beta - alpha)
    CHECK_THAT(gse(Distribution::uniform(1.0, 4.0), o, forced()).value, WithinRel(std::log(3.0 / 2.0) / 0.6, 1e-9));
    CHECK_THAT(gse(Distribution::uniform(1.0, 4.0), o).value, WithinRel(std::log(3.0 / 2.0) / 0.6, 1e-12));
    CHECK_THAT(gse(Distribution::exponential(2.0), kOrder, forced()).value,
               WithinRel(std::log(1.0 / (2.0 * g)) / dl, 1e-9));
    CHECK_THAT(gfe(Distribution::power(1.5, 1.0), kOrder, forced()).value,
               WithinRel(std::log(1.0 / (1.5 * g + 1.0)) / dl, 1e-9));
}

TEST_CASE("gdwse") {
    const double g = kOrder.gamma(), dl = kOrder.delta();
    const double lam = 1.3;
    const auto e = Distribution::exponential(lam);
    for (double t : {0.0, 0.4, 2.0, 7.0}) {
        const double expect = std::log((1.0 + t * lam * g) / (lam * lam * g * g)) / dl;
        CHECK_THAT(gdwse(e, kOrder, t).value, WithinRel(expect, 1e-12));
        CHECK_THAT(gdwse(e, kOrder, t, forced()).value, WithinRel(expect, 1e-9));
    }
    CHECK(gdwse(e, kOrder, 1.0).t.value() == 1.0);
    CHECK(gdwse(e, kOrder, 1.0).kind == MeasureKind::GDWSE);
    CHECK_FALSE(gwse(e, kOrder).t.has_value());
}

TEST_CASE("gdwse at zero equals gwse") {
    for (const auto& d : {Distribution::weibull(1.7), Distribution::gamma(2.5), Distribution::rayleigh(0.4),
                          Distribution::uniform(0.0, 2.0), Distribution::exponential(0.3)}) {
        INFO(d.to_string());
        CHECK_THAT(gdwse(d, kOrder, 0.0, forced()).value, WithinAbs(gwse(d, kOrder, forced()).value, 1e-9));
    }
}

TEST_CASE("gdwfe") {
    const double g = kOrder.gamma(), dl = kOrder.delta();
    const auto u = Distribution::uniform(0.0, 4.0);
    for (double t : {0.5, 1.0, 3.9}) {
        CHECK_THAT(gdwfe(u, kOrder, t, forced()).value, WithinRel(std::log(t * t / (g + 2.0)) / dl, 1e-9));
    }
    for (const auto& d : {Distribution::power(2.0, 3.0), Distribution::uniform(1.0, 2.0)}) {
        CHECK_THAT(gdwfe(d, kOrder, d.support_upper(), forced()).value,
                   WithinAbs(gwfe(d, kOrder, forced()).value, 1e-9));
    }
    CHECK_THROWS_AS(gdwfe(Distribution::uniform(1.0, 2.0), kOrder, 0.5), Error);
}

TEST_CASE("power family: (beta - alpha) gdwfe - log wmit is constant in t") {
    const auto p = Distribution::power(2.5, 2.0);
    const auto q = forced();
    std::vector<double> diffs;
    for (double t : {0.2, 0.7, 1.3, 2.0}) {
        diffs.push_back(kOrder.delta() * gdwfe(p, kOrder, t, q).value - std::log(wmit(p, t, q)));
    }
    for (double v : diffs) CHECK_THAT(v, WithinAbs(diffs.front(), 1e-9));
}

TEST_CASE("order statistics") {
    const double g = kOrder.gamma(), dl = kOrder.delta();
    const auto e = Distribution::exponential(0.8);
    CHECK_THAT(gwse_first_order_stat(e, kOrder, 1).value, WithinRel(gwse(e, kOrder).value, 1e-14));
    for (int n : {2, 5}) {
        CHECK_THAT(gwse_first_order_stat(e, kOrder, n, forced()).value,
                   WithinRel(2.0 / dl * std::log(1.0 / (0.8 * n * g)), 1e-9));
    }
    const auto p = Distribution::pareto(3.0, 2.0);
    CHECK_THAT(gwse_first_order_stat(p, kOrder, 3, forced()).value,
               WithinRel(std::log(4.0 / (3.0 * 3 * g - 2.0)) / dl, 1e-9));
    CHECK_THROWS_AS(gwse_first_order_stat(p, kOrder, 1), Error);
    CHECK_THROWS_AS(gwse_first_order_stat(e, kOrder, 0), Error);

    const auto pw = Distribution::power(1.5, 2.0);
    CHECK_THAT(gdwfe_max_order_stat(pw, kOrder, 1, 1.2).value, WithinRel(gdwfe(pw, kOrder, 1.2).value, 1e-14));
    CHECK_THAT(gdwfe_max_order_stat(pw, kOrder, 4, 1.2, forced()).value,
               WithinRel(gdwfe(Distribution::power(6.0, 2.0), kOrder, 1.2, forced()).value, 1e-9));
    CHECK_THAT(gdwfe_max_order_stat(Distribution::uniform(0.0, 1.0), kOrder, 2, 1.0, forced()).value,
               WithinRel(std::log(1.0 / (2.0 * g + 2.0)) / dl, 1e-9));
}

TEST_CASE("hazard recovery from gdwse") {
    const auto e = Distribution::exponential(1.7);
    auto ge = [&](double t) { return gdwse(e, kOrder, t).value; };
    for (double t : {0.5, 1.0, 3.0}) CHECK_THAT(hazard_from_gdwse(ge, kOrder, t), WithinAbs(1.7, 1e-4));

    const auto p = Distribution::pareto(5.0, 1.0);
    auto gp = [&](double t) { return gdwse(p, kOrder, t).value; };
    for (double t : {1.5, 2.0, 4.0}) CHECK_THAT(hazard_from_gdwse(gp, kOrder, t), WithinAbs(5.0 / t, 1e-4));

    // constant curve: hazard t e^{(alpha - beta) c} / gamma
    const double c = 0.37;
    auto flat = [&](double) { return c; };
    for (double t : {0.3, 1.0, 2.0}) {
        CHECK_THAT(hazard_from_gdwse(flat, kOrder, t), WithinRel(t * std::exp(-kOrder.delta() * c) / kOrder.gamma(), 1e-12));
    }

    for (const auto& d : {Distribution::weibull(2.0), Distribution::gamma(3.0)}) {
        auto g = [&](double t) { return gdwse(d, kOrder, t).value; };
        for (double u : {0.2, 0.6}) {
            const double t = d.quantile(u);
            CHECK_THAT(hazard_from_gdwse(g, kOrder, t), WithinAbs(d.hazard(t), 1e-4));
            CHECK_THAT(hazard_from_gdwse(g, kOrder, t, 1e-3, DerivativeRule::Richardson), WithinAbs(d.hazard(t), 1e-4));
        }
    }
}

TEST_CASE("reverse hazard recovery from gdwfe") {
    const auto p = Distribution::power(2.5, 1.0);
    auto gp = [&](double t) { return gdwfe(p, kOrder, t).value; };
    for (double t : {0.2, 0.5, 0.9}) CHECK_THAT(reverse_hazard_from_gdwfe(gp, kOrder, t), WithinAbs(2.5 / t, 1e-4));

    const auto u = Distribution::uniform(0.0, 3.0);
    auto gu = [&](double t) { return gdwfe(u, kOrder, t).value; };
    for (double t : {0.5, 1.5, 2.5}) CHECK_THAT(reverse_hazard_from_gdwfe(gu, kOrder, t), WithinAbs(1.0 / t, 1e-4));

    for (const auto& d : {Distribution::weibull(1.5), Distribution::exponential(1.0), Distribution::gamma(2.0)}) {
        auto g = [&](double t) { return gdwfe(d, kOrder, t).value; };
        for (double u : {0.3, 0.7}) {
            const double t = d.quantile(u);
            CHECK_THAT(reverse_hazard_from_gdwfe(g, kOrder, t), WithinAbs(d.reverse_hazard(t), 1e-4));
        }
    }
}

TEST_CASE("Rayleigh: constant gdwse and rate recovery") {
    for (double lam : {0.3, 1.0, 2.5}) {
        const auto r = Distribution::rayleigh(lam);
        const auto q = forced();
        double lo = INFINITY, hi = -INFINITY;
        for (double t = 0.0; t <= 3.0 + 1e-12; t += 0.25) {
            const double v = gdwse(r, kOrder, t, q).value;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            // (beta - alpha) gdwse(t) - log m*(t) + log gamma = 0
            CHECK_THAT(kOrder.delta() * v - std::log(wmrl(r, t, q)) + std::log(kOrder.gamma()), WithinAbs(0.0, 1e-7));
        }
        CHECK(hi - lo <= 1e-7);
        const double c = gdwse(r, kOrder, 0.0, q).value;
        CHECK_THAT(std::exp(-kOrder.delta() * c) / (2.0 * kOrder.gamma()), WithinRel(lam, 1e-6));
    }
}

TEST_CASE("gdwse monotonicity classification") {
    const auto r = Distribution::rayleigh(0.8);
    CHECK(classify_gdwse_monotonicity(r, kOrder, default_monotonicity_grid(r)) == Monotonicity::Constant);

    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) grid.push_back(0.1 * i);
    CHECK(classify_gdwse_monotonicity(Distribution::exponential(1.0), kOrder, grid) == Monotonicity::Increasing);

    const auto p = Distribution::pareto(5.0, 1.0);
    const auto o = EntropyOrder::make(0.6, 1.5);
    CHECK(classify_gdwse_monotonicity(p, o, default_monotonicity_grid(p)) == Monotonicity::Increasing);

    // Weibull with shape > 2 has a hazard growing faster than Rayleigh's.
    const auto w = Distribution::weibull(3.0);
    CHECK(classify_gdwse_monotonicity(w, kOrder, default_monotonicity_grid(w)) == Monotonicity::Decreasing);
    CHECK(default_monotonicity_grid(w).size() == 64);
}

TEST_CASE("stochastic ordering carries over") {
    const auto fast = Distribution::exponential(2.0);
    const auto slow = Distribution::exponential(1.0);
    CHECK(gwse(fast, kOrder).value <= gwse(slow, kOrder).value);
    for (double t = 0.0; t <= 5.0; t += 0.5) {
        CHECK(gdwse(fast, kOrder, t).value <= gdwse(slow, kOrder, t).value);
    }
    // power(1) <=st power(3), failure entropy ordered the other way
    const auto low = Distribution::power(1.0, 1.0);
    const auto high = Distribution::power(3.0, 1.0);
    CHECK(gwfe(low, kOrder).value >= gwfe(high, kOrder).value);
}

TEST_CASE("closed-form oracle suite passes") {
    const auto report = closed_form_suite(7, 20, 1e-8);
    CHECK(report.cells.size() == 16);
    for (const auto& c : report.cells) {
        INFO(c.quantity << " " << c.family << " max rel " << c.max_rel_error);
        CHECK(c.pass());
    }
    CHECK(report.all_pass());
}
