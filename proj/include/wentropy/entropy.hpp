#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wentropy/distribution.hpp"
#include "wentropy/order.hpp"
#include "wentropy/quadrature.hpp"

namespace wentropy {

// Generalized (weighted) survival and failure entropies of order (alpha, beta).
//
// Every measure has the shape  (1 / (beta - alpha)) * log I  where I is a
// survival_integral() or failure_integral() with exponent gamma = alpha + beta - 1
// (times n or theta for the order-statistic and proportional-model variants).
// Closed forms are used for exponential, Pareto, uniform, power and Rayleigh
// inputs unless QuadratureConfig::allow_closed_form is false.

enum class MeasureKind {
    GWSE,   ///< weighted survival
    GWFE,   ///< weighted failure
    GSE,    ///< unweighted survival
    GFE,    ///< unweighted failure
    GDWSE,  ///< dynamic weighted survival (residual life at t)
    GDWFE,  ///< dynamic weighted failure (inactivity at t)
    GDSE,   ///< dynamic unweighted survival
    GDFE,   ///< dynamic unweighted failure
};

std::string_view to_string(MeasureKind kind);
bool is_dynamic(MeasureKind kind);

struct EntropyValue {
    double value;
    MeasureKind kind;
    EntropyOrder order;
    std::optional<double> t;  ///< set iff kind is dynamic

    /// exp((beta - alpha) * value), i.e. the underlying integral.
    double integral() const;
};

EntropyValue gwse(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg = {});
EntropyValue gwfe(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg = {});
EntropyValue gse(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg = {});
EntropyValue gfe(const Distribution& d, const EntropyOrder& order, const QuadratureConfig& cfg = {});

EntropyValue gdwse(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg = {});
EntropyValue gdwfe(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg = {});
EntropyValue gdse(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg = {});
EntropyValue gdfe(const Distribution& d, const EntropyOrder& order, double t, const QuadratureConfig& cfg = {});

/// GWSE of the sample minimum X_{1:n}, whose sf is sf^n.
EntropyValue gwse_first_order_stat(const Distribution& d, const EntropyOrder& order, int n,
                                   const QuadratureConfig& cfg = {});

/// GDWFE of the sample maximum X_{n:n}, whose cdf is cdf^n.
EntropyValue gdwfe_max_order_stat(const Distribution& d, const EntropyOrder& order, int n, double t,
                                  const QuadratureConfig& cfg = {});

/// GWSE under the proportional hazards model, sf_theta = sf^theta.
EntropyValue gwse_proportional_hazards(const Distribution& d, const EntropyOrder& order, double theta,
                                       const QuadratureConfig& cfg = {});

/// GWFE under the proportional reversed hazards model, cdf_theta = cdf^theta.
EntropyValue gwfe_proportional_reverse_hazards(const Distribution& d, const EntropyOrder& order, double theta,
                                               const QuadratureConfig& cfg = {});

// ---- Hazard recovery -------------------------------------------------------

enum class DerivativeRule { Central, Richardson };

using EntropyCurve = std::function<double(double)>;

/// Hazard rate implied by a GDWSE curve g:
///   (1/gamma) * [ (beta - alpha) g'(t) + t exp(-(beta - alpha) g(t)) ].
/// g' is a finite difference with step h, so g must be defined on [t - h, t + h].
double hazard_from_gdwse(const EntropyCurve& g, const EntropyOrder& order, double t, double h = 1e-5,
                         DerivativeRule rule = DerivativeRule::Central);

/// Reversed hazard rate implied by a GDWFE curve g:
///   (1/gamma) * [ t exp(-(beta - alpha) g(t)) - (beta - alpha) g'(t) ].
double reverse_hazard_from_gdwfe(const EntropyCurve& g, const EntropyOrder& order, double t, double h = 1e-5,
                                 DerivativeRule rule = DerivativeRule::Central);

// ---- Monotonicity ----------------------------------------------------------

enum class Monotonicity { Increasing, Decreasing, Constant, Mixed };

std::string_view to_string(Monotonicity m);

/// 64 equally spaced points on [quantile(0.001), quantile(0.999)].
std::vector<double> default_monotonicity_grid(const Distribution& d, std::size_t points = 64);

/// Classifies t -> GDWSE(t) from the sign of
///   gamma * hazard(t) - t exp(-(beta - alpha) GDWSE(t))
/// (the derivative of (beta - alpha) GDWSE) over the grid.
Monotonicity classify_gdwse_monotonicity(const Distribution& d, const EntropyOrder& order,
                                         std::span<const double> grid, const QuadratureConfig& cfg = {});

}  // namespace wentropy
