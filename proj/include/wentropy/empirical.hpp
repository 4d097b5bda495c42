#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "wentropy/order.hpp"
#include "wentropy/sample.hpp"

namespace wentropy {

/// How the empirical survival function is integrated.
///
/// SegmentSum sums the segments between consecutive order statistics,
///   sum_{i=1}^{n-1} ((X_(i+1)^2 - X_(i)^2) / 2) * w_i^gamma,
/// and is the default: it reproduces the published critical values of the
/// exponentiality test. ExactStep also adds the [0, X_(1)) segment on
/// which the empirical survival function equals 1, i.e. X_(1)^2 / 2.
enum class EstimatorVariant { SegmentSum, ExactStep };

std::string_view to_string(EstimatorVariant v);
std::optional<EstimatorVariant> parse_variant(std::string_view text);

/// Empirical GWSE, weights w_i = 1 - i/n. Throws DegenerateSample when the
/// log argument is not positive (e.g. all observations tied), and
/// InvalidParameter for n < 2.
double empirical_gwse(const Sample& s, const EntropyOrder& order,
                      EstimatorVariant variant = EstimatorVariant::SegmentSum);

/// Empirical GWFE, weights w_i = i/n, truncated at X_(n). ExactStep has no
/// leading segment here (the empirical cdf is 0 below X_(1)), so both
/// variants agree.
double empirical_gwfe(const Sample& s, const EntropyOrder& order,
                      EstimatorVariant variant = EstimatorVariant::SegmentSum);

namespace detail {

/// The sum inside the GWSE logarithm for an already sorted span.
double empirical_survival_sum(std::span<const double> sorted, double gamma, EstimatorVariant variant);

}  // namespace detail

}  // namespace wentropy
