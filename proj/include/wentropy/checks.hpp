#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wentropy/distribution.hpp"
#include "wentropy/entropy.hpp"
#include "wentropy/order.hpp"
#include "wentropy/quadrature.hpp"

namespace wentropy {

// ---- Shannon-type quantities used by the lower bounds -----------------------

double shannon_entropy(const Distribution& d, const QuadratureConfig& cfg = {});
double mean_log(const Distribution& d, const QuadratureConfig& cfg = {});
/// Entropy of the residual life [X | X > t].
double residual_entropy(const Distribution& d, double t, const QuadratureConfig& cfg = {});
/// Entropy of [X | X < t].
double past_entropy(const Distribution& d, double t, const QuadratureConfig& cfg = {});

// ---- Inequalities ----------------------------------------------------------

/// One inequality  lhs <= rhs.  margin = rhs - lhs.
struct BoundItem {
    std::string name;
    std::string statement;
    bool applicable = false;
    std::string reason;  ///< why the item is inapplicable, empty otherwise
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct BoundReport {
    std::vector<BoundItem> items;

    /// Smallest margin over applicable items (+inf when none apply).
    double min_margin() const;
    bool all_hold(double tolerance = 1e-9) const { return min_margin() >= -tolerance; }
};

/// Evaluates every inequality that applies to d: the WMRL/WMIT upper bounds,
/// the log-sum (Shannon) lower bounds, and with a time t their dynamic
/// versions plus the finite-support upper bounds.
///
/// The WMRL and WMIT upper bounds compare sf^gamma (resp. cdf^gamma) with
/// sf (resp. cdf), so they only hold for gamma >= 1 and are reported as
/// inapplicable otherwise.
BoundReport bound_check(const Distribution& d, const EntropyOrder& order, std::optional<double> t = std::nullopt,
                        const QuadratureConfig& cfg = {});

// ---- Affine transformation identities --------------------------------------

struct IdentityResidual {
    double lhs = 0.0;
    double rhs = 0.0;

    double residual() const { return lhs - rhs; }
    double relative() const;
};

/// Residuals of the Z = aX + b identities. Left-hand sides are integrated
/// over the transformed distribution; right-hand sides are assembled from
/// the entropies of X.
struct AffineResiduals {
    IdentityResidual survival;                  ///< exp-scale GWSE identity
    std::optional<IdentityResidual> failure;    ///< bounded support only
    std::optional<IdentityResidual> survival_dynamic;
    std::optional<IdentityResidual> failure_dynamic;
    std::optional<IdentityResidual> scale_only; ///< b == 0: log-scale form, 2 log a / (beta - alpha)

    double max_relative() const;
};

AffineResiduals affine_identity_check(const Distribution& d, const EntropyOrder& order, double a, double b,
                                      std::optional<double> t = std::nullopt, const QuadratureConfig& cfg = {});

// ---- Proportional (reversed) hazards model --------------------------------

enum class Side { Survival, Failure };

struct ProportionalReport {
    Side side = Side::Survival;
    double theta = 1.0;
    /// Identity relating X_theta to the order (theta alpha, theta beta - theta + 1).
    bool identity_applicable = false;
    std::string reason;
    IdentityResidual identity;
    double transformed = 0.0;  ///< entropy of X_theta
    double base = 0.0;         ///< entropy of X
    double scaled = 0.0;       ///< entropy of theta X
    /// transformed <= base <= scaled for theta >= 1, reversed for theta <= 1.
    bool chain_holds = false;
};

ProportionalReport proportional_model_check(const Distribution& d, const EntropyOrder& order, double theta,
                                            Side side = Side::Survival, const QuadratureConfig& cfg = {});

}  // namespace wentropy
