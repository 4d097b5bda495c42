#include "wentropy/empirical.hpp"

#include <cmath>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

std::string_view to_string(EstimatorVariant v) {
    return v == EstimatorVariant::SegmentSum ? "segment-sum" : "exact-step";
}

std::optional<EstimatorVariant> parse_variant(std::string_view text) {
    if (text == "segment-sum" || text == "segment") return EstimatorVariant::SegmentSum;
    if (text == "exact-step" || text == "exact") return EstimatorVariant::ExactStep;
    return std::nullopt;
}

namespace detail {

double empirical_survival_sum(std::span<const double> x, double gamma, EstimatorVariant variant) {
    const std::size_t n = x.size();
    const double dn = static_cast<double>(n);
    double sum = variant == EstimatorVariant::ExactStep ? 0.5 * x[0] * x[0] : 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double seg = 0.5 * (x[i] * x[i] - x[i - 1] * x[i - 1]);
        sum += seg * std::pow(1.0 - static_cast<double>(i) / dn, gamma);
    }
    return sum;
}

}  // namespace detail

namespace {

void require_estimable(const Sample& s) {
    if (s.size() < 2) {
        throw Error(ErrorCode::InvalidParameter, "empirical estimators need at least two observations");
    }
}

double log_or_throw(double sum, const EntropyOrder& order) {
    if (!(sum > 0.0)) {
        throw Error(ErrorCode::DegenerateSample,
                    "empirical entropy undefined: sample has no strictly positive gap (all values tied)");
    }
    return std::log(sum) / order.delta();
}

}  // namespace

double empirical_gwse(const Sample& s, const EntropyOrder& order, EstimatorVariant variant) {
    require_estimable(s);
    return log_or_throw(detail::empirical_survival_sum(s.values(), order.gamma(), variant), order);
}

double empirical_gwfe(const Sample& s, const EntropyOrder& order, EstimatorVariant) {
    require_estimable(s);
    const auto x = s.values();
    const std::size_t n = x.size();
    const double dn = static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double seg = 0.5 * (x[i] * x[i] - x[i - 1] * x[i - 1]);
        sum += seg * std::pow(static_cast<double>(i) / dn, order.gamma());
    }
    return log_or_throw(sum, order);
}

}  // namespace wentropy
