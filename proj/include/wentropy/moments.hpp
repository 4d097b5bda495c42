#pragma once

#include <functional>
#include <limits>

#include "wentropy/distribution.hpp"
#include "wentropy/quadrature.hpp"

namespace wentropy {

// Weighted tail integrals shared by every entropy measure.
//
// All integrals run over the support of the distribution: a time t below
// the support's lower edge is clamped to that edge, and the failure-side
// upper limit is clamped to the support's upper edge.

/// True when  int x^power (sf(x))^exponent dx  over the support is finite.
bool survival_integral_converges(const Distribution& d, int power, double exponent);

/// int_{t'}^inf x^power (sf(x)/sf(t'))^exponent dx, t' = max(t, lower edge).
/// power is 0 or 1. Throws Divergence or OutOfDomain (sf(t) == 0).
double survival_integral(const Distribution& d, int power, double exponent, double t,
                         const QuadratureConfig& cfg = {});

/// int_{lower}^{t'} x^power (cdf(x)/cdf(t'))^exponent dx, t' = min(t, upper edge).
/// t may be +infinity, which requires bounded support (Divergence otherwise).
double failure_integral(const Distribution& d, int power, double exponent,
                        double t = std::numeric_limits<double>::infinity(),
                        const QuadratureConfig& cfg = {});

/// Weighted mean residual life  int_t^inf x sf(x)/sf(t) dx.
double wmrl(const Distribution& d, double t, const QuadratureConfig& cfg = {});

/// Weighted mean inactivity time  int_0^t x cdf(x)/cdf(t) dx.
double wmit(const Distribution& d, double t, const QuadratureConfig& cfg = {});

enum class Conditioning { None, Above, Below };

/// E[fn(X)], E[fn(X) | X > t] or E[fn(X) | X < t], integrated in probability space.
double expectation(const Distribution& d, const std::function<double(double)>& fn,
                   Conditioning cond = Conditioning::None, double t = 0.0,
                   const QuadratureConfig& cfg = {});

}  // namespace wentropy
