#pragma once

#include <functional>

namespace wentropy {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    /// Split point (as a cdf level) between the body and the tail of
    /// semi-infinite integrals evaluated directly in x.
    double tail_cutoff = 1.0 - 1e-12;
    /// Refinement levels for tanh-sinh, bisection depth for Gauss-Kronrod.
    int max_subdivisions = 15;
    /// When false every measure is evaluated by quadrature, even where a
    /// closed form is available. The verification suite relies on this.
    bool allow_closed_form = true;

    void validate() const;
};

using Integrand = std::function<double(double)>;

/// Integral over a finite interval; the endpoints are never evaluated, so
/// integrable endpoint singularities are fine.
double integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg);

/// Adaptive Gauss-Kronrod (G15/K31) over a finite interval with a smooth integrand.
double integrate_smooth(const Integrand& f, double a, double b, const QuadratureConfig& cfg);

/// Integral over [a, +infinity).
double integrate_to_infinity(const Integrand& f, double a, const QuadratureConfig& cfg);

}  // namespace wentropy
