#include "wentropy/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wentropy/error.hpp"
#include "wentropy/moments.hpp"

namespace wentropy {

double shannon_entropy(const Distribution& d, const QuadratureConfig& cfg) {
    return -expectation(d, [&](double x) { return d.log_pdf(x); }, Conditioning::None, 0.0, cfg);
}

double mean_log(const Distribution& d, const QuadratureConfig& cfg) {
    return expectation(d, [](double x) { return std::log(x); }, Conditioning::None, 0.0, cfg);
}

double residual_entropy(const Distribution& d, double t, const QuadratureConfig& cfg) {
    return -expectation(d, [&](double x) { return d.log_pdf(x); }, Conditioning::Above, t, cfg) + d.log_sf(t);
}

double past_entropy(const Distribution& d, double t, const QuadratureConfig& cfg) {
    return -expectation(d, [&](double x) { return d.log_pdf(x); }, Conditioning::Below, t, cfg) + d.log_cdf(t);
}

double BoundReport::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& item : items) {
        if (item.applicable) m = std::min(m, item.margin);
    }
    return m;
}

namespace {

double xlogx(double g) { return g > 0.0 ? g * std::log(g) : 0.0; }

// Runs an evaluator filling lhs/rhs; divergence and domain failures turn
// the item inapplicable instead of aborting the whole report.
template <typename Eval>
BoundItem evaluate_item(std::string name, std::string statement, Eval&& eval) {
    BoundItem item;
    item.name = std::move(name);
    item.statement = std::move(statement);
    try {
        eval(item);
        item.applicable = true;
        item.margin = item.rhs - item.lhs;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Divergence && e.code() != ErrorCode::OutOfDomain &&
            e.code() != ErrorCode::Inapplicable) {
            throw;
        }
        item.applicable = false;
        item.reason = e.what();
    }
    return item;
}

void require_gamma_at_least_one(const EntropyOrder& order) {
    if (order.gamma() < 1.0) {
        std::ostringstream os;
        os << "needs gamma = alpha + beta - 1 >= 1 (sf^gamma <= sf), got gamma = " << order.gamma();
        throw Error(ErrorCode::Inapplicable, os.str());
    }
}

}  // namespace

BoundReport bound_check(const Distribution& d, const EntropyOrder& order, std::optional<double> t,
                        const QuadratureConfig& cfg) {
    const double delta = order.delta();
    const double gamma = order.gamma();
    BoundReport report;

    report.items.push_back(evaluate_item("wmrl_upper", "GWSE <= log(m*(0)) / (beta - alpha)", [&](BoundItem& it) {
        require_gamma_at_least_one(order);
        it.lhs = gwse(d, order, cfg).value;
        it.rhs = std::log(wmrl(d, d.support_lower(), cfg)) / delta;
    }));

    report.items.push_back(evaluate_item(
        "shannon_lower_survival", "H(X) + E[log X] <= (beta - alpha) GWSE + gamma", [&](BoundItem& it) {
            it.rhs = delta * gwse(d, order, cfg).value + gamma;
            it.lhs = shannon_entropy(d, cfg) + mean_log(d, cfg);
        }));

    report.items.push_back(evaluate_item("wmit_upper", "GWFE <= log(mu*(inf)) / (beta - alpha)", [&](BoundItem& it) {
        require_gamma_at_least_one(order);
        it.lhs = gwfe(d, order, cfg).value;
        it.rhs = std::log(failure_integral(d, 1, 1.0, std::numeric_limits<double>::infinity(), cfg)) / delta;
    }));

    report.items.push_back(evaluate_item(
        "shannon_lower_failure", "H(X) + E[log X] <= (beta - alpha) GWFE + gamma", [&](BoundItem& it) {
            it.rhs = delta * gwfe(d, order, cfg).value + gamma;
            it.lhs = shannon_entropy(d, cfg) + mean_log(d, cfg);
        }));

    if (!t) return report;
    const double time = *t;

    report.items.push_back(
        evaluate_item("wmrl_upper_dynamic", "GDWSE(t) <= log(m*(t)) / (beta - alpha)", [&](BoundItem& it) {
            require_gamma_at_least_one(order);
            it.lhs = gdwse(d, order, time, cfg).value;
            it.rhs = std::log(wmrl(d, time, cfg)) / delta;
        }));

    report.items.push_back(evaluate_item(
        "shannon_lower_residual", "H(X;t) + E[log X | X > t] <= (beta - alpha) GDWSE(t) + gamma",
        [&](BoundItem& it) {
            it.rhs = delta * gdwse(d, order, time, cfg).value + gamma;
            it.lhs = residual_entropy(d, time, cfg) +
                     expectation(d, [](double x) { return std::log(x); }, Conditioning::Above, time, cfg);
        }));

    report.items.push_back(
        evaluate_item("wmit_upper_dynamic", "GDWFE(t) <= log(mu*(t)) / (beta - alpha)", [&](BoundItem& it) {
            require_gamma_at_least_one(order);
            it.lhs = gdwfe(d, order, time, cfg).value;
            it.rhs = std::log(wmit(d, time, cfg)) / delta;
        }));

    report.items.push_back(evaluate_item(
        "shannon_lower_past", "Hbar(X;t) + E[log X | X < t] <= (beta - alpha) GDWFE(t) + gamma",
        [&](BoundItem& it) {
            it.rhs = delta * gdwfe(d, order, time, cfg).value + gamma;
            it.lhs = past_entropy(d, time, cfg) +
                     expectation(d, [](double x) { return std::log(x); }, Conditioning::Below, time, cfg);
        }));

    report.items.push_back(evaluate_item(
        "finite_support_upper_residual",
        "GDWSE(t) <= int g log g / ((beta - alpha) int g) + log(b - t) / (beta - alpha), g = x (sf(x)/sf(t))^gamma",
        [&](BoundItem& it) {
            if (!d.has_bounded_support()) {
                throw Error(ErrorCode::Inapplicable, "needs bounded support [0, b]");
            }
            const double lo = std::max(time, d.support_lower());
            const double hi = d.support_upper();
            if (!(lo < hi)) throw Error(ErrorCode::OutOfDomain, "needs t < b");
            const double log_s0 = d.log_sf(lo);
            auto g = [&](double x) { return x * std::exp(gamma * (d.log_sf(x) - log_s0)); };
            const double mass = survival_integral(d, 1, gamma, lo, cfg);
            const double glogg = integrate([&](double x) { return xlogx(g(x)); }, lo, hi, cfg);
            it.lhs = gdwse(d, order, time, cfg).value;
            it.rhs = glogg / (delta * mass) + std::log(hi - lo) / delta;
        }));

    report.items.push_back(evaluate_item(
        "finite_support_upper_past",
        "GDWFE(t) <= int g log g / ((beta - alpha) int g) + log(t) / (beta - alpha), g = x (cdf(x)/cdf(t))^gamma",
        [&](BoundItem& it) {
            const double lo = d.support_lower();
            const double hi = std::min(time, d.support_upper());
            if (!(d.cdf(hi) > 0.0) || !(hi > lo)) throw Error(ErrorCode::OutOfDomain, "needs cdf(t) > 0");
            const double log_f0 = hi >= d.support_upper() ? 0.0 : d.log_cdf(hi);
            auto g = [&](double x) { return x * std::exp(gamma * (d.log_cdf(x) - log_f0)); };
            const double mass = failure_integral(d, 1, gamma, hi, cfg);
            const double glogg = integrate([&](double x) { return xlogx(g(x)); }, lo, hi, cfg);
            it.lhs = gdwfe(d, order, time, cfg).value;
            it.rhs = glogg / (delta * mass) + std::log(hi - lo) / delta;
        }));

    return report;
}

double IdentityResidual::relative() const {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

double AffineResiduals::max_relative() const {
    double m = survival.relative();
    for (const auto* r : {&failure, &survival_dynamic, &failure_dynamic, &scale_only}) {
        if (*r) m = std::max(m, (*r)->relative());
    }
    return m;
}

AffineResiduals affine_identity_check(const Distribution& d, const EntropyOrder& order, double a, double b,
                                      std::optional<double> t, const QuadratureConfig& cfg) {
    const Distribution z = d.affine(a, b);
    const double g = order.gamma();
    constexpr double kTop = std::numeric_limits<double>::infinity();

    AffineResiduals out;
    out.survival.lhs = survival_integral(z, 1, g, 0.0, cfg);
    out.survival.rhs = a * a * gwse(d, order, cfg).integral() + a * b * gse(d, order, cfg).integral();

    if (d.has_bounded_support()) {
        out.failure = IdentityResidual{
            failure_integral(z, 1, g, kTop, cfg),
            a * a * gwfe(d, order, cfg).integral() + a * b * gfe(d, order, cfg).integral()};
    }

    if (t) {
        const double tz = *t;
        const double tx = (tz - b) / a;
        if (z.sf(std::max(tz, z.support_lower())) > 0.0) {
            out.survival_dynamic = IdentityResidual{
                survival_integral(z, 1, g, tz, cfg),
                a * a * survival_integral(d, 1, g, tx, cfg) + a * b * survival_integral(d, 0, g, tx, cfg)};
        }
        if (z.cdf(tz) > 0.0) {
            out.failure_dynamic = IdentityResidual{
                failure_integral(z, 1, g, tz, cfg),
                a * a * failure_integral(d, 1, g, tx, cfg) + a * b * failure_integral(d, 0, g, tx, cfg)};
        }
    }

    if (b == 0.0) {
        const double tz = t.value_or(0.0);
        out.scale_only = IdentityResidual{survival_integral(z, 1, g, tz, cfg),
                                          a * a * survival_integral(d, 1, g, tz / a, cfg)};
    }
    return out;
}

ProportionalReport proportional_model_check(const Distribution& d, const EntropyOrder& order, double theta,
                                            Side side, const QuadratureConfig& cfg) {
    ProportionalReport r;
    r.side = side;
    r.theta = theta;

    const Distribution stretched = d.affine(theta, 0.0);
    if (side == Side::Survival) {
        r.transformed = gwse_proportional_hazards(d, order, theta, cfg).value;
        r.base = gwse(d, order, cfg).value;
        r.scaled = gwse(stretched, order, cfg).value;
    } else {
        r.transformed = gwfe_proportional_reverse_hazards(d, order, theta, cfg).value;
        r.base = gwfe(d, order, cfg).value;
        r.scaled = gwfe(stretched, order, cfg).value;
    }

    const double alpha2 = theta * order.alpha();
    const double beta2 = theta * order.beta() - theta + 1.0;
    if (EntropyOrder::is_valid(alpha2, beta2)) {
        const auto order2 = EntropyOrder::make(alpha2, beta2);
        const double factor = (theta * order.beta() - theta * order.alpha() - theta + 1.0) / order.delta();
        const double other = side == Side::Survival ? gwse(d, order2, cfg).value : gwfe(d, order2, cfg).value;
        r.identity_applicable = true;
        r.identity = IdentityResidual{r.transformed, factor * other};
    } else {
        std::ostringstream os;
        os << "transformed order (" << alpha2 << ", " << beta2 << ") is not a valid order";
        r.reason = os.str();
    }

    const double tol = 1e-9 * std::max({1.0, std::abs(r.transformed), std::abs(r.base), std::abs(r.scaled)});
    if (theta >= 1.0) {
        r.chain_holds = r.transformed <= r.base + tol && r.base <= r.scaled + tol;
    } else {
        r.chain_holds = r.transformed + tol >= r.base && r.base + tol >= r.scaled;
    }
    return r;
}

}  // namespace wentropy
