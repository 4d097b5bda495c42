#include "wentropy/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

namespace bq = boost::math::quadrature;

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "quadrature tolerances must be positive");
    }
    if (!(tail_cutoff > 0.0 && tail_cutoff < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "quadrature tail cutoff must lie in (0, 1)");
    }
    if (max_subdivisions < 1) {
        throw Error(ErrorCode::InvalidParameter, "quadrature needs at least one subdivision level");
    }
}

namespace {

double checked(double value, const char* where) {
    if (!std::isfinite(value)) {
        std::ostringstream os;
        os << where << " produced a non-finite value";
        throw Error(ErrorCode::QuadratureFailure, os.str());
    }
    return value;
}

// Integrands may legitimately overflow at abscissas extremely close to an
// integrable singularity; treat those points as the quadrature rule's own
// endpoint truncation instead of aborting.
auto guarded(const Integrand& f) {
    return [&f](double x) {
        const double y = f(x);
        return std::isfinite(y) ? y : 0.0;
    };
}

}  // namespace

double integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    if (!(b > a)) return 0.0;
    // Workspaces are per thread: tanh_sinh builds its abscissa tables lazily.
    thread_local bq::tanh_sinh<double> rule(static_cast<std::size_t>(cfg.max_subdivisions));
    try {
        double error = 0.0;
        double l1 = 0.0;
        const double value = rule.integrate(guarded(f), a, b, cfg.rel_tol, &error, &l1);
        return checked(value, "tanh-sinh quadrature");
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error(ErrorCode::QuadratureFailure, std::string("tanh-sinh quadrature failed: ") + ex.what());
    }
}

double integrate_smooth(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    if (!(b > a)) return 0.0;
    try {
        double error = 0.0;
        const double value = bq::gauss_kronrod<double, 31>::integrate(
            guarded(f), a, b, static_cast<unsigned>(cfg.max_subdivisions), cfg.rel_tol, &error);
        return checked(value, "Gauss-Kronrod quadrature");
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error(ErrorCode::QuadratureFailure, std::string("Gauss-Kronrod quadrature failed: ") + ex.what());
    }
}

double integrate_to_infinity(const Integrand& f, double a, const QuadratureConfig& cfg) {
    thread_local bq::exp_sinh<double> rule(static_cast<std::size_t>(cfg.max_subdivisions));
    try {
        double error = 0.0;
        double l1 = 0.0;
        const double value = rule.integrate(guarded(f), a, std::numeric_limits<double>::infinity(),
                                            cfg.rel_tol, &error, &l1);
        return checked(value, "exp-sinh quadrature");
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error(ErrorCode::QuadratureFailure, std::string("exp-sinh quadrature failed: ") + ex.what());
    }
}

}  // namespace wentropy
