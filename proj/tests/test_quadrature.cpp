#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "wentropy/error.hpp"
#include "wentropy/quadrature.hpp"

using namespace wentropy;
using Catch::Matchers::WithinRel;

TEST_CASE("finite interval with endpoint singularity") {
    QuadratureConfig cfg;
    CHECK_THAT(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg), WithinRel(2.0, 1e-10));
    CHECK_THAT(integrate([](double x) { return std::log(x); }, 0.0, 1.0, cfg), WithinRel(-1.0, 1e-10));
}

TEST_CASE("smooth Gauss-Kronrod") {
    QuadratureConfig cfg;
    CHECK_THAT(integrate_smooth([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, cfg),
               WithinRel(2.0, 1e-12));
    CHECK_THAT(integrate_smooth([](double x) { return std::exp(-x * x); }, -10.0, 10.0, cfg),
               WithinRel(std::sqrt(std::numbers::pi), 1e-12));
}

TEST_CASE("semi-infinite tail") {
    QuadratureConfig cfg;
    CHECK_THAT(integrate_to_infinity([](double x) { return std::exp(-x); }, 2.0, cfg), WithinRel(std::exp(-2.0), 1e-11));
    CHECK_THAT(integrate_to_infinity([](double x) { return 1.0 / (x * x); }, 1.0, cfg), WithinRel(1.0, 1e-10));
}

TEST_CASE("non-finite integrand values inside are treated as zero") {
    QuadratureConfig cfg;
    auto f = [](double x) { return x < 1e-300 ? std::nan("") : 1.0; };
    CHECK_THAT(integrate(f, 0.0, 1.0, cfg), WithinRel(1.0, 1e-10));
}

TEST_CASE("config validation") {
    QuadratureConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.tail_cutoff = 1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.abs_tol = -1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}
