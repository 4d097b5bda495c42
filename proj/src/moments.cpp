#include "wentropy/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

namespace {

void check_arguments(int power, double exponent) {
    if (power != 0 && power != 1) {
        throw Error(ErrorCode::InvalidParameter, "weight power must be 0 or 1");
    }
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw Error(ErrorCode::InvalidParameter, "integrand exponent must be positive");
    }
}

std::optional<double> closed_form_survival(const Distribution& d, int k, double e, double start) {
    if (!d.is_untransformed()) return std::nullopt;
    if (const auto* f = std::get_if<Exponential>(&d.family())) {
        const double r = f->rate * e;
        return k == 0 ? 1.0 / r : (1.0 + start * r) / (r * r);
    }
    if (const auto* f = std::get_if<Pareto>(&d.family())) {
        return std::pow(start, k + 1) / (f->shape * e - (k + 1));
    }
    if (const auto* f = std::get_if<Uniform>(&d.family())) {
        const double s = f->upper - start;
        if (k == 0) return s / (e + 1.0);
        return s * (f->upper + start * (e + 1.0)) / ((e + 1.0) * (e + 2.0));
    }
    if (const auto* f = std::get_if<Rayleigh>(&d.family())) {
        if (k == 1) return 1.0 / (2.0 * f->rate * e);
        if (start == 0.0) return 0.5 * std::sqrt(std::numbers::pi / (f->rate * e));
    }
    return std::nullopt;
}

std::optional<double> closed_form_failure(const Distribution& d, int k, double e, double end) {
    if (!d.is_untransformed()) return std::nullopt;
    if (const auto* f = std::get_if<Uniform>(&d.family())) {
        const double s = end - f->lower;
        if (k == 0) return s / (e + 1.0);
        return s * (end * (e + 1.0) + f->lower) / ((e + 1.0) * (e + 2.0));
    }
    if (const auto* f = std::get_if<Power>(&d.family())) {
        const double ce = f->shape * e;
        return k == 0 ? end / (ce + 1.0) : end * end / (ce + 2.0);
    }
    return std::nullopt;
}

double log_weight(int k, double x) { return k == 0 ? 0.0 : std::log(x); }

}  // namespace

bool survival_integral_converges(const Distribution& d, int power, double exponent) {
    if (const auto* f = std::get_if<Pareto>(&d.family())) {
        return f->shape * exponent > power + 1.0;
    }
    return true;
}

double survival_integral(const Distribution& d, int k, double e, double t, const QuadratureConfig& cfg) {
    cfg.validate();
    check_arguments(k, e);
    const double start = std::max(t, d.support_lower());
    const double s0 = d.sf(start);
    if (!(s0 > 0.0)) {
        std::ostringstream os;
        os << "survival function vanishes at t=" << t;
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    if (!survival_integral_converges(d, k, e)) {
        std::ostringstream os;
        os << "tail integral of x^" << k << " sf^" << e << " diverges for " << d.to_string();
        throw Error(ErrorCode::Divergence, os.str());
    }
    if (cfg.allow_closed_form) {
        if (auto v = closed_form_survival(d, k, e, start)) return *v;
    }

    const double log_s0 = std::log(s0);
    auto direct = [&](double x) { return std::exp(log_weight(k, x) + e * (d.log_sf(x) - log_s0)); };

    if (d.has_bounded_support()) {
        return integrate(direct, start, d.support_upper(), cfg);
    }
    if (d.has_closed_form_quantile()) {
        // Body in x up to the conditional median; the tail in v = sf(x)/sf(t'),
        // dx = -s0 dv / pdf(x), evaluated in logs so that deep-tail abscissas
        // do not underflow. 1/pdf blows up where the density vanishes at the
        // lower edge (Rayleigh), hence no v-space near v = 1.
        const double mid = d.isf(0.5 * s0);
        auto in_probability_space = [&](double v) {
            const double x = d.isf(v * s0);
            return std::exp(log_weight(k, x) + e * std::log(v) + log_s0 - d.log_pdf(x));
        };
        return integrate(direct, start, mid, cfg) + integrate(in_probability_space, 0.0, 0.5, cfg);
    }
    // No closed-form quantile: integrate in x, body by Gauss-Kronrod up to
    // the cutoff quantile and the remaining tail by exp-sinh.
    const double split = std::max(start, d.isf(std::max(1e-300, (1.0 - cfg.tail_cutoff) * s0)));
    return integrate_smooth(direct, start, split, cfg) + integrate_to_infinity(direct, split, cfg);
}

double failure_integral(const Distribution& d, int k, double e, double t, const QuadratureConfig& cfg) {
    cfg.validate();
    check_arguments(k, e);
    const double lo = d.support_lower();
    const double hi = d.support_upper();
    if (std::isinf(t) && !d.has_bounded_support()) {
        std::ostringstream os;
        os << "failure-side integral over the whole support diverges for unbounded " << d.to_string();
        throw Error(ErrorCode::Divergence, os.str());
    }
    const double end = std::min(t, hi);
    if (!(d.cdf(end) > 0.0)) {
        std::ostringstream os;
        os << "cdf vanishes at t=" << t;
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    if (cfg.allow_closed_form) {
        if (auto v = closed_form_failure(d, k, e, end)) return *v;
    }
    const double log_f0 = end >= hi ? 0.0 : d.log_cdf(end);
    auto direct = [&](double x) { return std::exp(log_weight(k, x) + e * (d.log_cdf(x) - log_f0)); };
    return integrate(direct, lo, end, cfg);
}

double wmrl(const Distribution& d, double t, const QuadratureConfig& cfg) {
    return survival_integral(d, 1, 1.0, t, cfg);
}

double wmit(const Distribution& d, double t, const QuadratureConfig& cfg) {
    if (t <= d.support_lower()) return 0.0;
    return failure_integral(d, 1, 1.0, t, cfg);
}

double expectation(const Distribution& d, const std::function<double(double)>& fn, Conditioning cond, double t,
                   const QuadratureConfig& cfg) {
    cfg.validate();
    switch (cond) {
        case Conditioning::None:
            return integrate(
                [&](double u) { return (u > 0.0 && u < 1.0) ? fn(d.quantile(u)) : 0.0; }, 0.0, 1.0, cfg);
        case Conditioning::Above: {
            const double s0 = d.sf(t);
            if (!(s0 > 0.0)) throw Error(ErrorCode::OutOfDomain, "conditioning event X > t has probability zero");
            return integrate([&](double v) { return v > 0.0 ? fn(d.isf(std::min(1.0, v * s0))) : 0.0; }, 0.0, 1.0,
                             cfg);
        }
        case Conditioning::Below: {
            const double f0 = d.cdf(t);
            if (!(f0 > 0.0)) throw Error(ErrorCode::OutOfDomain, "conditioning event X < t has probability zero");
            return integrate(
                [&](double u) {
                    const double p = u * f0;
                    return (p > 0.0 && p < 1.0) ? fn(d.quantile(p)) : 0.0;
                },
                0.0, 1.0, cfg);
        }
    }
    return 0.0;
}

}  // namespace wentropy
