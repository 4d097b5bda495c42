#include "wentropy/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "wentropy/distribution.hpp"
#include "wentropy/entropy.hpp"
#include "wentropy/moments.hpp"
#include "wentropy/order.hpp"
#include "wentropy/sampler.hpp"

namespace wentropy {

bool OracleReport::all_pass() const {
    if (cells.empty()) return false;
    for (const auto& c : cells) {
        if (!c.pass()) return false;
    }
    return true;
}

namespace {

struct Draw {
    EntropyOrder order = EntropyOrder::test_default();
    double p1 = 1.0;  // rate, shape or upper edge
    double p2 = 1.0;  // Pareto scale
    double theta = 1.0;
    double t = 0.0;
};

double uniform_in(SeededSampler& rng, double lo, double hi) { return lo + (hi - lo) * rng.next_uniform(); }

EntropyOrder random_order(SeededSampler& rng) {
    const double beta = uniform_in(rng, 1.0, 3.0);
    // Keep alpha away from the open ends so delta stays in [0.05, 0.95].
    const double alpha = uniform_in(rng, beta - 0.95, beta - 0.05);
    return EntropyOrder::make(alpha, beta);
}

// closed: the integral exp((beta - alpha) * entropy) from the printed formula.
// quad: the same integral by quadrature.
struct CellSpec {
    std::string quantity;
    std::string family;
    std::string formula;
    std::function<Draw(SeededSampler&)> draw;
    std::function<double(const Draw&)> closed;
    std::function<double(const Draw&, const QuadratureConfig&)> quad;
};

Draw exp_draw(SeededSampler& rng) {
    Draw d;
    d.order = random_order(rng);
    d.p1 = uniform_in(rng, 0.2, 5.0);
    d.theta = uniform_in(rng, 0.2, 5.0);
    d.t = uniform_in(rng, 0.0, 3.0);
    return d;
}

// Shape chosen so that a * theta * gamma and a * gamma both exceed 2.5.
Draw pareto_draw(SeededSampler& rng) {
    Draw d;
    d.order = random_order(rng);
    d.theta = uniform_in(rng, 0.2, 5.0);
    const double floor = 2.5 / (d.order.gamma() * std::min(1.0, d.theta));
    d.p1 = std::max(floor, 2.5) * uniform_in(rng, 1.0, 3.0);
    d.p2 = uniform_in(rng, 0.2, 5.0);
    return d;
}

Draw bounded_draw(SeededSampler& rng) {
    Draw d;
    d.order = random_order(rng);
    d.p1 = uniform_in(rng, 0.2, 5.0);
    d.theta = uniform_in(rng, 0.2, 5.0);
    return d;
}

std::vector<CellSpec> cell_specs() {
    using Q = const QuadratureConfig&;
    std::vector<CellSpec> cells;
    auto g = [](const Draw& d) { return d.order.gamma(); };
    auto ex = [](const Draw& d) { return Distribution::exponential(d.p1); };
    auto pa = [](const Draw& d) { return Distribution::pareto(d.p1, d.p2); };
    auto un = [](const Draw& d) { return Distribution::uniform(0.0, d.p1); };
    auto pw = [](const Draw& d) { return Distribution::power(d.p1, 1.0); };

    // Survival side, weighted.
    cells.push_back({"gwse", "exp", "-2 log(lambda gamma)", exp_draw,
                     [=](const Draw& d) { return std::exp(-2.0 * std::log(d.p1 * g(d))); },
                     [=](const Draw& d, Q c) { return gwse(ex(d), d.order, c).integral(); }});
    cells.push_back({"gwse(X_theta)", "exp", "-2 log(lambda theta gamma)", exp_draw,
                     [=](const Draw& d) { return std::exp(-2.0 * std::log(d.p1 * d.theta * g(d))); },
                     [=](const Draw& d, Q c) { return gwse_proportional_hazards(ex(d), d.order, d.theta, c).integral(); }});
    cells.push_back({"gwse(theta X)", "exp", "2 log theta - 2 log(lambda gamma)", exp_draw,
                     [=](const Draw& d) { return std::exp(2.0 * std::log(d.theta) - 2.0 * std::log(d.p1 * g(d))); },
                     [=](const Draw& d, Q c) { return gwse(ex(d).affine(d.theta, 0.0), d.order, c).integral(); }});
    cells.push_back({"gwse", "pareto", "log b^2/(a gamma - 2)", pareto_draw,
                     [=](const Draw& d) { return d.p2 * d.p2 / (d.p1 * g(d) - 2.0); },
                     [=](const Draw& d, Q c) { return gwse(pa(d), d.order, c).integral(); }});
    cells.push_back({"gwse(X_theta)", "pareto", "log b^2/(a theta gamma - 2)", pareto_draw,
                     [=](const Draw& d) { return d.p2 * d.p2 / (d.p1 * d.theta * g(d) - 2.0); },
                     [=](const Draw& d, Q c) { return gwse_proportional_hazards(pa(d), d.order, d.theta, c).integral(); }});
    cells.push_back({"gwse(theta X)", "pareto", "log b^2 theta^2/(a gamma - 2)", pareto_draw,
                     [=](const Draw& d) { return d.p2 * d.p2 * d.theta * d.theta / (d.p1 * g(d) - 2.0); },
                     [=](const Draw& d, Q c) { return gwse(pa(d).affine(d.theta, 0.0), d.order, c).integral(); }});

    // Residual-life columns for the exponential family, plus the static Pareto WMRL.
    cells.push_back({"wmrl(0)", "exp", "1/lambda^2", exp_draw,
                     [=](const Draw& d) { return 1.0 / (d.p1 * d.p1); },
                     [=](const Draw& d, Q c) { return wmrl(ex(d), 0.0, c); }});
    cells.push_back({"gdwse(t)", "exp", "log((1 + t lambda gamma)/(lambda^2 gamma^2))", exp_draw,
                     [=](const Draw& d) {
                         const double lg = d.p1 * g(d);
                         return (1.0 + d.t * lg) / (lg * lg);
                     },
                     [=](const Draw& d, Q c) { return gdwse(ex(d), d.order, d.t, c).integral(); }});
    cells.push_back({"wmrl(t)", "exp", "(1 + t lambda)/lambda^2", exp_draw,
                     [=](const Draw& d) { return (1.0 + d.t * d.p1) / (d.p1 * d.p1); },
                     [=](const Draw& d, Q c) { return wmrl(ex(d), d.t, c); }});
    cells.push_back({"wmrl(0)", "pareto", "b^2/(a - 2)", pareto_draw,
                     [=](const Draw& d) { return d.p2 * d.p2 / (d.p1 - 2.0); },
                     [=](const Draw& d, Q c) { return wmrl(pa(d), 0.0, c); }});

    // Failure side, weighted.
    cells.push_back({"gwfe", "uniform", "log a^2/(2 + gamma)", bounded_draw,
                     [=](const Draw& d) { return d.p1 * d.p1 / (2.0 + g(d)); },
                     [=](const Draw& d, Q c) { return gwfe(un(d), d.order, c).integral(); }});
    cells.push_back({"gwfe(X_theta)", "uniform", "log a^2/(2 + gamma theta)", bounded_draw,
                     [=](const Draw& d) { return d.p1 * d.p1 / (2.0 + g(d) * d.theta); },
                     [=](const Draw& d, Q c) {
                         return gwfe_proportional_reverse_hazards(un(d), d.order, d.theta, c).integral();
                     }});
    cells.push_back({"gwfe(theta X)", "uniform", "log a^2 theta^2/(2 + gamma)", bounded_draw,
                     [=](const Draw& d) { return d.p1 * d.p1 * d.theta * d.theta / (2.0 + g(d)); },
                     [=](const Draw& d, Q c) { return gwfe(un(d).affine(d.theta, 0.0), d.order, c).integral(); }});
    cells.push_back({"gwfe", "power", "log 1/(2 + gamma c)", bounded_draw,
                     [=](const Draw& d) { return 1.0 / (2.0 + g(d) * d.p1); },
                     [=](const Draw& d, Q c) { return gwfe(pw(d), d.order, c).integral(); }});
    cells.push_back({"gwfe(X_theta)", "power", "log 1/(2 + gamma theta c)", bounded_draw,
                     [=](const Draw& d) { return 1.0 / (2.0 + g(d) * d.theta * d.p1); },
                     [=](const Draw& d, Q c) {
                         return gwfe_proportional_reverse_hazards(pw(d), d.order, d.theta, c).integral();
                     }});
    cells.push_back({"gwfe(theta X)", "power", "log theta^2/(2 + gamma c)", bounded_draw,
                     [=](const Draw& d) { return d.theta * d.theta / (2.0 + g(d) * d.p1); },
                     [=](const Draw& d, Q c) { return gwfe(pw(d).affine(d.theta, 0.0), d.order, c).integral(); }});
    return cells;
}

}  // namespace

OracleReport closed_form_suite(std::uint64_t seed, int draws, double tolerance) {
    const auto start = std::chrono::steady_clock::now();
    QuadratureConfig qcfg;
    qcfg.allow_closed_form = false;

    OracleReport report;
    report.tolerance = tolerance;
    const auto specs = cell_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& spec = specs[i];
        OracleCell cell{spec.quantity, spec.family, spec.formula};
        SeededSampler rng(seed, i);
        for (int k = 0; k < draws; ++k) {
            const Draw d = spec.draw(rng);
            double err = std::numeric_limits<double>::infinity();
            try {
                const double closed = spec.closed(d);
                const double quad = spec.quad(d, qcfg);
                err = std::abs(quad - closed) / std::abs(closed);
            } catch (const std::exception&) {
                // counted as a failed draw
            }
            ++cell.draws;
            if (err <= tolerance) ++cell.passed;
            if (!(err <= cell.max_rel_error)) cell.max_rel_error = err;
        }
        report.cells.push_back(std::move(cell));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace wentropy
