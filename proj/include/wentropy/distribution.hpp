#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <variant>

namespace wentropy {

struct Exponential {
    double rate;
};

/// sf(x) = (scale / x)^shape for x >= scale.
struct Pareto {
    double shape;
    double scale;
};

struct Uniform {
    double lower;
    double upper;
};

/// cdf(x) = (x / upper)^shape on (0, upper).
struct Power {
    double shape;
    double upper;
};

/// sf(x) = exp(-rate * x^2); note the rate multiplies x^2 directly.
struct Rayleigh {
    double rate;
};

/// Unit-scale Weibull, sf(x) = exp(-x^shape). Use Distribution::affine for other scales.
struct Weibull {
    double shape;
};

/// Unit-scale gamma with density x^(shape-1) e^(-x) / Gamma(shape).
struct Gamma {
    double shape;
};

using Family = std::variant<Exponential, Pareto, Uniform, Power, Rayleigh, Weibull, Gamma>;

enum class FamilyTag { Exponential, Pareto, Uniform, Power, Rayleigh, Weibull, Gamma };

std::string_view to_string(FamilyTag tag);

/// A parametric lifetime distribution, optionally transformed as
/// Z = scale * X + shift with scale > 0 and shift >= 0.
///
/// Values are immutable after construction; all member functions are
/// pure and safe to call from several threads.
///
/// Outside the support, pdf/cdf/sf return their limiting values rather
/// than failing. hazard() and reverse_hazard() throw OutOfDomain where
/// their denominator vanishes; quantile() and isf() throw outside (0, 1).
class Distribution {
public:
    static Distribution exponential(double rate);
    static Distribution pareto(double shape, double scale);
    static Distribution uniform(double lower, double upper);
    static Distribution power(double shape, double upper);
    static Distribution rayleigh(double rate);
    static Distribution weibull(double shape);
    static Distribution gamma(double shape);

    /// Distribution of scale * X + shift.
    Distribution affine(double scale, double shift) const;

    FamilyTag tag() const noexcept;
    const Family& family() const noexcept { return family_; }
    double scale() const noexcept { return scale_; }
    double shift() const noexcept { return shift_; }
    bool is_untransformed() const noexcept { return scale_ == 1.0 && shift_ == 0.0; }

    double support_lower() const noexcept;
    /// +infinity for unbounded support.
    double support_upper() const noexcept;
    bool has_bounded_support() const noexcept {
        return support_upper() < std::numeric_limits<double>::infinity();
    }
    /// False only for families whose inverse sf is computed iteratively.
    bool has_closed_form_quantile() const noexcept;

    double pdf(double x) const;
    double log_pdf(double x) const;
    double cdf(double x) const;
    double sf(double x) const;
    double log_cdf(double x) const;
    double log_sf(double x) const;

    /// Inverse cdf on (0, 1).
    double quantile(double u) const;
    /// Inverse survival function: the x with sf(x) = p, p in (0, 1].
    double isf(double p) const;

    double hazard(double t) const;
    double reverse_hazard(double t) const;

    /// Text form accepted by parse_distribution(), e.g. "pareto(3,1)".
    std::string to_string() const;

private:
    explicit Distribution(Family family) : family_(family) {}

    double to_base(double z) const noexcept { return (z - shift_) / scale_; }

    Family family_;
    double scale_ = 1.0;
    double shift_ = 0.0;
};

}  // namespace wentropy
