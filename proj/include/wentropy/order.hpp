#pragma once

namespace wentropy {

/// Order (alpha, beta) of the generalized entropies.
///
/// Valid orders satisfy beta >= 1 and beta - 1 < alpha < beta, so that
/// delta = beta - alpha lies in (0, 1) and gamma = alpha + beta - 1 > 0.
/// Instances can only be obtained through make(), which validates.
class EntropyOrder {
public:
    static EntropyOrder make(double alpha, double beta);
    static bool is_valid(double alpha, double beta) noexcept;

    /// Default order of the exponentiality test.
    static EntropyOrder test_default() { return make(0.26, 1.25); }

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return alpha_ + beta_ - 1.0; }
    double delta() const noexcept { return beta_ - alpha_; }

    bool operator==(const EntropyOrder&) const = default;

private:
    EntropyOrder(double alpha, double beta) : alpha_(alpha), beta_(beta) {}

    double alpha_;
    double beta_;
};

}  // namespace wentropy
