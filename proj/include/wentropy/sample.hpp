#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wentropy/distribution.hpp"
#include "wentropy/sampler.hpp"

namespace wentropy {

/// Non-negative observations kept sorted ascending (order statistics).
class Sample {
public:
    Sample() = default;

    /// Sorts the values; throws InvalidParameter on negative or non-finite input.
    static Sample from_values(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t i) const { return values_[i]; }

    double mean() const;
    Sample scaled(double factor) const;

private:
    explicit Sample(std::vector<double> sorted) : values_(std::move(sorted)) {}

    std::vector<double> values_;
};

/// One draw from d. Gamma uses Marsaglia-Tsang rejection (with the
/// U^(1/q) boost for shape < 1); every other family inverts its quantile.
double draw(const Distribution& d, SeededSampler& sampler);

/// n i.i.d. draws, reproducible for a given (seed, stream).
Sample sample(const Distribution& d, std::size_t n, SeededSampler& sampler);

/// Unsorted draws written into out (resized to n); used by the simulation loops.
void draw_n(const Distribution& d, std::size_t n, SeededSampler& sampler, std::vector<double>& out);

}  // namespace wentropy
