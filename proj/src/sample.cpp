#include "wentropy/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wentropy/error.hpp"

namespace wentropy {

Sample Sample::from_values(std::vector<double> values) {
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            std::ostringstream os;
            os << "sample values must be finite and non-negative, got " << v;
            throw Error(ErrorCode::InvalidParameter, os.str());
        }
    }
    std::sort(values.begin(), values.end());
    return Sample(std::move(values));
}

double Sample::mean() const {
    if (values_.empty()) return 0.0;
    return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

Sample Sample::scaled(double factor) const {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw Error(ErrorCode::InvalidParameter, "sample scale factor must be positive");
    }
    std::vector<double> out(values_);
    for (double& v : out) v *= factor;
    return Sample(std::move(out));
}

namespace {

double draw_unit_gamma(double shape, SeededSampler& rng) {
    if (shape < 1.0) {
        const double g = draw_unit_gamma(shape + 1.0, rng);
        return g * std::pow(rng.next_uniform(), 1.0 / shape);
    }
    // Marsaglia & Tsang (2000), "A simple method for generating gamma variables".
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

double draw(const Distribution& d, SeededSampler& sampler) {
    if (const auto* g = std::get_if<Gamma>(&d.family())) {
        return d.shift() + d.scale() * draw_unit_gamma(g->shape, sampler);
    }
    return d.quantile(sampler.next_uniform());
}

void draw_n(const Distribution& d, std::size_t n, SeededSampler& sampler, std::vector<double>& out) {
    out.resize(n);
    for (auto& v : out) v = draw(d, sampler);
}

Sample sample(const Distribution& d, std::size_t n, SeededSampler& sampler) {
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "sample size must be at least 1");
    std::vector<double> values;
    draw_n(d, n, sampler, values);
    return Sample::from_values(std::move(values));
}

}  // namespace wentropy
