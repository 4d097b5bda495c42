#include "wentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wentropy/error.hpp"
#include "wentropy/moments.hpp"

namespace wentropy {

std::string_view to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::GWSE: return "gwse";
        case MeasureKind::GWFE: return "gwfe";
        case MeasureKind::GSE: return "gse";
        case MeasureKind::GFE: return "gfe";
        case MeasureKind::GDWSE: return "gdwse";
        case MeasureKind::GDWFE: return "gdwfe";
        case MeasureKind::GDSE: return "gdse";
        case MeasureKind::GDFE: return "gdfe";
    }
    return "unknown";
}

bool is_dynamic(MeasureKind kind) {
    return kind == MeasureKind::GDWSE || kind == MeasureKind::GDWFE || kind == MeasureKind::GDSE ||
           kind == MeasureKind::GDFE;
}

double EntropyValue::integral() const { return std::exp(order.delta() * value); }

namespace {

EntropyValue make_value(double integral, MeasureKind kind, const EntropyOrder& order,
                        std::optional<double> t = std::nullopt) {
    return EntropyValue{std::log(integral) / order.delta(), kind, order, t};
}

void require_count(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "order-statistic sample size must be at least 1");
}

void require_theta(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw Error(ErrorCode::InvalidParameter, "proportional-model theta must be positive");
    }
}

constexpr double kTop = std::numeric_limits<double>::infinity();

}  // namespace

EntropyValue gwse(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg) {
    return make_value(survival_integral(d, 1, order.gamma(), 0.0, cfg), MeasureKind::GWSE, order);
}

EntropyValue gwfe(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg) {
    return make_value(failure_integral(d, 1, order.gamma(), kTop, cfg), MeasureKind::GWFE, order);
}

EntropyValue gse(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg) {
    return make_value(survival_integral(d, 0, order.gamma(), 0.0, cfg), MeasureKind::GSE, order);
}

EntropyValue gfe(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg) {
    return make_value(failure_integral(d, 0, order.gamma(), kTop, cfg), MeasureKind::GFE, order);
}

EntropyValue gdwse(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg) {
    return make_value(survival_integral(d, 1, order.gamma(), t, cfg), MeasureKind::GDWSE, order, t);
}

EntropyValue gdwfe(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg) {
    return make_value(failure_integral(d, 1, order.gamma(), t, cfg), MeasureKind::GDWFE, order, t);
}

EntropyValue gdse(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg) {
    return make_value(survival_integral(d, 0, order.gamma(), t, cfg), MeasureKind::GDSE, order, t);
}

EntropyValue gdfe(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg) {
    return make_value(failure_integral(d, 0, order.gamma(), t, cfg), MeasureKind::GDFE, order, t);
}

EntropyValue gwse_first_order_stat(const Distribution& d, const EntropyOrder& order, int n,
                                   const QuadratureConfig& cfg) {
    require_count(n);
    return make_value(survival_integral(d, 1, n * order.gamma(), 0.0, cfg), MeasureKind::GWSE, order);
}

EntropyValue gdwfe_max_order_stat(const Distribution& d, const EntropyOrder& order, int n, double t,
                                  const QuadratureConfig& cfg) {
    require_count(n);
    return make_value(failure_integral(d, 1, n * order.gamma(), t, cfg), MeasureKind::GDWFE, order, t);
}

EntropyValue gwse_proportional_hazards(const Distribution& d, const EntropyOrder& order, double theta,
                                       const QuadratureConfig& cfg) {
    require_theta(theta);
    return make_value(survival_integral(d, 1, theta * order.gamma(), 0.0, cfg), MeasureKind::GWSE, order);
}

EntropyValue gwfe_proportional_reverse_hazards(const Distribution& d, const EntropyOrder& order, double theta,
                                               const QuadratureConfig& cfg) {
    require_theta(theta);
    return make_value(failure_integral(d, 1, theta * order.gamma(), kTop, cfg), MeasureKind::GWFE, order);
}

namespace {

double derivative(const EntropyCurve& g, double t, double h, DerivativeRule rule) {
    if (!(h > 0.0)) throw Error(ErrorCode::InvalidParameter, "finite-difference step must be positive");
    auto central = [&](double step) { return (g(t + step) - g(t - step)) / (2.0 * step); };
    if (rule == DerivativeRule::Central) return central(h);
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

}  // namespace

double hazard_from_gdwse(const EntropyCurve& g, const EntropyOrder& order, double t, double h,
                         DerivativeRule rule) {
    const double delta = order.delta();
    return (delta * derivative(g, t, h, rule) + t * std::exp(-delta * g(t))) / order.gamma();
}

double reverse_hazard_from_gdwfe(const EntropyCurve& g, const EntropyOrder& order, double t, double h,
                                 DerivativeRule rule) {
    const double delta = order.delta();
    return (t * std::exp(-delta * g(t)) - delta * derivative(g, t, h, rule)) / order.gamma();
}

std::string_view to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "increasing";
        case Monotonicity::Decreasing: return "decreasing";
        case Monotonicity::Constant: return "constant";
        case Monotonicity::Mixed: return "mixed";
    }
    return "unknown";
}

std::vector<double> default_monotonicity_grid(const Distribution& d, std::size_t points) {
    if (points < 2) throw Error(ErrorCode::InvalidParameter, "monotonicity grid needs at least two points");
    const double a = d.quantile(0.001);
    const double b = d.quantile(0.999);
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

Monotonicity classify_gdwse_monotonicity(const Distribution& d, const EntropyOrder& order,
                                         std::span<const double> grid, const QuadratureConfig& cfg) {
    if (grid.empty()) throw Error(ErrorCode::InvalidParameter, "monotonicity grid is empty");
    // Relative threshold under which the derivative counts as zero.
    constexpr double kZero = 1e-8;
    bool any_positive = false;
    bool any_negative = false;
    for (double t : grid) {
        const double drive = order.gamma() * d.hazard(t);
        const double pull = t / survival_integral(d, 1, order.gamma(), t, cfg);
        const double slope = drive - pull;
        const double scale = std::max(std::abs(drive) + std::abs(pull), 1e-300);
        if (slope > kZero * scale) any_positive = true;
        if (slope < -kZero * scale) any_negative = true;
    }
    if (any_positive && any_negative) return Monotonicity::Mixed;
    if (any_positive) return Monotonicity::Increasing;
    if (any_negative) return Monotonicity::Decreasing;
    return Monotonicity::Constant;
}

}  // namespace wentropy
