#include "wentropy/distribution.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << what << " must be a finite positive number, got " << v;
        throw Error(ErrorCode::InvalidParameter, os.str());
    }
}

// Per-family kernels in the untransformed coordinate. Each family
// provides: lower, upper, pdf, log_pdf, cdf, sf, log_cdf, log_sf,
// quantile, isf, hazard.

// ---- Exponential ----------------------------------------------------------
double lower(const Exponential&) { return 0.0; }
double upper(const Exponential&) { return kInf; }
double log_pdf(const Exponential& d, double x) { return x < 0.0 ? -kInf : std::log(d.rate) - d.rate * x; }
double pdf(const Exponential& d, double x) { return x < 0.0 ? 0.0 : d.rate * std::exp(-d.rate * x); }
double cdf(const Exponential& d, double x) { return x <= 0.0 ? 0.0 : -std::expm1(-d.rate * x); }
double sf(const Exponential& d, double x) { return x <= 0.0 ? 1.0 : std::exp(-d.rate * x); }
double log_sf(const Exponential& d, double x) { return x <= 0.0 ? 0.0 : -d.rate * x; }
double log_cdf(const Exponential& d, double x) { return x <= 0.0 ? -kInf : std::log(-std::expm1(-d.rate * x)); }
double quantile(const Exponential& d, double u) { return -std::log1p(-u) / d.rate; }
double isf(const Exponential& d, double p) { return -std::log(p) / d.rate; }
double hazard(const Exponential& d, double) { return d.rate; }

// ---- Pareto ---------------------------------------------------------------
double lower(const Pareto& d) { return d.scale; }
double upper(const Pareto&) { return kInf; }
double log_pdf(const Pareto& d, double x) {
    if (x < d.scale) return -kInf;
    return std::log(d.shape) + d.shape * std::log(d.scale) - (d.shape + 1.0) * std::log(x);
}
double pdf(const Pareto& d, double x) { return x < d.scale ? 0.0 : std::exp(log_pdf(d, x)); }
double log_sf(const Pareto& d, double x) { return x <= d.scale ? 0.0 : d.shape * std::log(d.scale / x); }
double sf(const Pareto& d, double x) { return std::exp(log_sf(d, x)); }
double cdf(const Pareto& d, double x) { return x <= d.scale ? 0.0 : -std::expm1(log_sf(d, x)); }
double log_cdf(const Pareto& d, double x) { return x <= d.scale ? -kInf : std::log(cdf(d, x)); }
double quantile(const Pareto& d, double u) { return d.scale * std::exp(-std::log1p(-u) / d.shape); }
double isf(const Pareto& d, double p) { return d.scale * std::exp(-std::log(p) / d.shape); }
double hazard(const Pareto& d, double x) { return x < d.scale ? 0.0 : d.shape / x; }

// ---- Uniform --------------------------------------------------------------
double lower(const Uniform& d) { return d.lower; }
double upper(const Uniform& d) { return d.upper; }
double pdf(const Uniform& d, double x) { return (x < d.lower || x > d.upper) ? 0.0 : 1.0 / (d.upper - d.lower); }
double log_pdf(const Uniform& d, double x) {
    return (x < d.lower || x > d.upper) ? -kInf : -std::log(d.upper - d.lower);
}
double cdf(const Uniform& d, double x) {
    if (x <= d.lower) return 0.0;
    if (x >= d.upper) return 1.0;
    return (x - d.lower) / (d.upper - d.lower);
}
double sf(const Uniform& d, double x) {
    if (x <= d.lower) return 1.0;
    if (x >= d.upper) return 0.0;
    return (d.upper - x) / (d.upper - d.lower);
}
double log_cdf(const Uniform& d, double x) { return std::log(cdf(d, x)); }
double log_sf(const Uniform& d, double x) { return std::log(sf(d, x)); }
double quantile(const Uniform& d, double u) { return d.lower + (d.upper - d.lower) * u; }
double isf(const Uniform& d, double p) { return d.upper - (d.upper - d.lower) * p; }
double hazard(const Uniform& d, double x) { return x < d.lower ? 0.0 : 1.0 / (d.upper - x); }

// ---- Power ----------------------------------------------------------------
double lower(const Power&) { return 0.0; }
double upper(const Power& d) { return d.upper; }
double log_cdf(const Power& d, double x) {
    if (x <= 0.0) return -kInf;
    if (x >= d.upper) return 0.0;
    return d.shape * std::log(x / d.upper);
}
double cdf(const Power& d, double x) { return std::exp(log_cdf(d, x)); }
double sf(const Power& d, double x) {
    if (x <= 0.0) return 1.0;
    if (x >= d.upper) return 0.0;
    return -std::expm1(d.shape * std::log(x / d.upper));
}
double log_sf(const Power& d, double x) { return std::log(sf(d, x)); }
double log_pdf(const Power& d, double x) {
    if (x <= 0.0 || x > d.upper) return -kInf;
    return std::log(d.shape / d.upper) + (d.shape - 1.0) * std::log(x / d.upper);
}
double pdf(const Power& d, double x) { return std::exp(log_pdf(d, x)); }
double quantile(const Power& d, double u) { return d.upper * std::exp(std::log(u) / d.shape); }
double isf(const Power& d, double p) { return d.upper * std::exp(std::log1p(-p) / d.shape); }
double hazard(const Power& d, double x) { return pdf(d, x) / sf(d, x); }

// ---- Rayleigh -------------------------------------------------------------
double lower(const Rayleigh&) { return 0.0; }
double upper(const Rayleigh&) { return kInf; }
double log_sf(const Rayleigh& d, double x) { return x <= 0.0 ? 0.0 : -d.rate * x * x; }
double sf(const Rayleigh& d, double x) { return std::exp(log_sf(d, x)); }
double cdf(const Rayleigh& d, double x) { return x <= 0.0 ? 0.0 : -std::expm1(-d.rate * x * x); }
double log_cdf(const Rayleigh& d, double x) { return std::log(cdf(d, x)); }
double log_pdf(const Rayleigh& d, double x) {
    return x <= 0.0 ? -kInf : std::log(2.0 * d.rate * x) - d.rate * x * x;
}
double pdf(const Rayleigh& d, double x) { return x <= 0.0 ? 0.0 : std::exp(log_pdf(d, x)); }
double quantile(const Rayleigh& d, double u) { return std::sqrt(-std::log1p(-u) / d.rate); }
double isf(const Rayleigh& d, double p) { return std::sqrt(-std::log(p) / d.rate); }
double hazard(const Rayleigh& d, double x) { return x <= 0.0 ? 0.0 : 2.0 * d.rate * x; }

// ---- Weibull --------------------------------------------------------------
double lower(const Weibull&) { return 0.0; }
double upper(const Weibull&) { return kInf; }
double log_sf(const Weibull& d, double x) { return x <= 0.0 ? 0.0 : -std::pow(x, d.shape); }
double sf(const Weibull& d, double x) { return std::exp(log_sf(d, x)); }
double cdf(const Weibull& d, double x) { return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x, d.shape)); }
double log_cdf(const Weibull& d, double x) { return std::log(cdf(d, x)); }
double log_pdf(const Weibull& d, double x) {
    if (x < 0.0) return -kInf;
    if (x == 0.0) return d.shape < 1.0 ? kInf : (d.shape == 1.0 ? 0.0 : -kInf);
    return std::log(d.shape) + (d.shape - 1.0) * std::log(x) - std::pow(x, d.shape);
}
double pdf(const Weibull& d, double x) { return std::exp(log_pdf(d, x)); }
double quantile(const Weibull& d, double u) { return std::pow(-std::log1p(-u), 1.0 / d.shape); }
double isf(const Weibull& d, double p) { return std::pow(-std::log(p), 1.0 / d.shape); }
double hazard(const Weibull& d, double x) {
    if (x <= 0.0) return d.shape < 1.0 ? kInf : (d.shape == 1.0 ? 1.0 : 0.0);
    return d.shape * std::pow(x, d.shape - 1.0);
}

// ---- Gamma ----------------------------------------------------------------
double lower(const Gamma&) { return 0.0; }
double upper(const Gamma&) { return kInf; }
double log_pdf(const Gamma& d, double x) {
    if (x < 0.0) return -kInf;
    if (x == 0.0) return d.shape < 1.0 ? kInf : (d.shape == 1.0 ? 0.0 : -kInf);
    return (d.shape - 1.0) * std::log(x) - x - std::lgamma(d.shape);
}
double pdf(const Gamma& d, double x) { return std::exp(log_pdf(d, x)); }
double cdf(const Gamma& d, double x) { return x <= 0.0 ? 0.0 : boost::math::gamma_p(d.shape, x); }
double sf(const Gamma& d, double x) { return x <= 0.0 ? 1.0 : boost::math::gamma_q(d.shape, x); }
double log_cdf(const Gamma& d, double x) { return std::log(cdf(d, x)); }
double log_sf(const Gamma& d, double x) { return std::log(sf(d, x)); }
double quantile(const Gamma& d, double u) { return boost::math::gamma_p_inv(d.shape, u); }
double isf(const Gamma& d, double p) { return p >= 1.0 ? 0.0 : boost::math::gamma_q_inv(d.shape, p); }
double hazard(const Gamma& d, double x) {
    if (x <= 0.0) return d.shape < 1.0 ? kInf : (d.shape == 1.0 ? 1.0 : 0.0);
    const double s = sf(d, x);
    // Far tail: the hazard of a unit gamma tends to 1.
    if (s < 1e-300) return 1.0;
    return pdf(d, x) / s;
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Exponential: return "exp";
        case FamilyTag::Pareto: return "pareto";
        case FamilyTag::Uniform: return "uniform";
        case FamilyTag::Power: return "power";
        case FamilyTag::Rayleigh: return "rayleigh";
        case FamilyTag::Weibull: return "weibull";
        case FamilyTag::Gamma: return "gamma";
    }
    return "unknown";
}

Distribution Distribution::exponential(double rate) {
    require_positive(rate, "exponential rate");
    return Distribution(Exponential{rate});
}

Distribution Distribution::pareto(double shape, double scale) {
    require_positive(shape, "pareto shape");
    require_positive(scale, "pareto scale");
    return Distribution(Pareto{shape, scale});
}

Distribution Distribution::uniform(double lower, double upper) {
    if (!std::isfinite(lower) || !std::isfinite(upper) || lower < 0.0 || !(upper > lower)) {
        std::ostringstream os;
        os << "uniform bounds must satisfy 0 <= lower < upper, got (" << lower << ", " << upper << ")";
        throw Error(ErrorCode::InvalidParameter, os.str());
    }
    return Distribution(Uniform{lower, upper});
}

Distribution Distribution::power(double shape, double upper) {
    require_positive(shape, "power shape");
    require_positive(upper, "power upper bound");
    return Distribution(Power{shape, upper});
}

Distribution Distribution::rayleigh(double rate) {
    require_positive(rate, "rayleigh rate");
    return Distribution(Rayleigh{rate});
}

Distribution Distribution::weibull(double shape) {
    require_positive(shape, "weibull shape");
    return Distribution(Weibull{shape});
}

Distribution Distribution::gamma(double shape) {
    require_positive(shape, "gamma shape");
    return Distribution(Gamma{shape});
}

Distribution Distribution::affine(double scale, double shift) const {
    require_positive(scale, "affine scale");
    if (!(shift >= 0.0) || !std::isfinite(shift)) {
        throw Error(ErrorCode::InvalidParameter, "affine shift must be finite and non-negative");
    }
    Distribution out = *this;
    out.shift_ = scale * shift_ + shift;
    out.scale_ = scale * scale_;
    return out;
}

FamilyTag Distribution::tag() const noexcept { return static_cast<FamilyTag>(family_.index()); }

double Distribution::support_lower() const noexcept {
    return shift_ + scale_ * std::visit([](const auto& f) { return lower(f); }, family_);
}

double Distribution::support_upper() const noexcept {
    return shift_ + scale_ * std::visit([](const auto& f) { return upper(f); }, family_);
}

bool Distribution::has_closed_form_quantile() const noexcept { return tag() != FamilyTag::Gamma; }

double Distribution::pdf(double x) const {
    const double z = to_base(x);
    return std::visit([z](const auto& f) { return wentropy::pdf(f, z); }, family_) / scale_;
}

double Distribution::log_pdf(double x) const {
    const double z = to_base(x);
    return std::visit([z](const auto& f) { return wentropy::log_pdf(f, z); }, family_) - std::log(scale_);
}

double Distribution::cdf(double x) const {
    const double z = to_base(x);
    return std::visit([z](const auto& f) { return wentropy::cdf(f, z); }, family_);
}

double Distribution::sf(double x) const {
    const double z = to_base(x);
    return std::visit([z](const auto& f) { return wentropy::sf(f, z); }, family_);
}

double Distribution::log_cdf(double x) const {
    const double z = to_base(x);
    return std::visit([z](const auto& f) { return wentropy::log_cdf(f, z); }, family_);
}

double Distribution::log_sf(double x) const {
    const double z = to_base(x);
    return std::visit([z](const auto& f) { return wentropy::log_sf(f, z); }, family_);
}

double Distribution::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        std::ostringstream os;
        os << "quantile argument must lie in (0, 1), got " << u;
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    return shift_ + scale_ * std::visit([u](const auto& f) { return wentropy::quantile(f, u); }, family_);
}

double Distribution::isf(double p) const {
    if (!(p > 0.0 && p <= 1.0)) {
        std::ostringstream os;
        os << "inverse survival argument must lie in (0, 1], got " << p;
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    if (p == 1.0) return support_lower();
    return shift_ + scale_ * std::visit([p](const auto& f) { return wentropy::isf(f, p); }, family_);
}

double Distribution::hazard(double t) const {
    if (!(sf(t) > 0.0)) {
        std::ostringstream os;
        os << "hazard undefined at t=" << t << " (survival function is zero)";
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    const double z = to_base(t);
    return std::visit([z](const auto& f) { return wentropy::hazard(f, z); }, family_) / scale_;
}

double Distribution::reverse_hazard(double t) const {
    const double F = cdf(t);
    if (!(F > 0.0)) {
        std::ostringstream os;
        os << "reverse hazard undefined at t=" << t << " (cdf is zero)";
        throw Error(ErrorCode::OutOfDomain, os.str());
    }
    if (tag() == FamilyTag::Power) {
        // c / z exactly, avoiding pdf/cdf cancellation.
        const double z = to_base(t);
        const auto& p = std::get<Power>(family_);
        if (z < p.upper) return p.shape / z / scale_;
    }
    return pdf(t) / F;
}

std::string Distribution::to_string() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Exponential>) os << "exp(" << f.rate << ")";
            else if constexpr (std::is_same_v<T, Pareto>) os << "pareto(" << f.shape << "," << f.scale << ")";
            else if constexpr (std::is_same_v<T, Uniform>) os << "uniform(" << f.lower << "," << f.upper << ")";
            else if constexpr (std::is_same_v<T, Power>) os << "power(" << f.shape << "," << f.upper << ")";
            else if constexpr (std::is_same_v<T, Rayleigh>) os << "rayleigh(" << f.rate << ")";
            else if constexpr (std::is_same_v<T, Weibull>) os << "weibull(" << f.shape << ")";
            else os << "gamma(" << f.shape << ")";
        },
        family_);
    if (is_untransformed()) return os.str();
    std::ostringstream wrapped;
    wrapped.precision(17);
    wrapped << "affine(" << os.str() << "," << scale_ << "," << shift_ << ")";
    return wrapped.str();
}

}  // namespace wentropy
