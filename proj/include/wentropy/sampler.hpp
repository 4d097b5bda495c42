#pragma once

#include <cstdint>
#include <random>

namespace wentropy {

// Deterministic random source identified by (seed, stream).
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard; the uniform and normal transforms below are implemented here
// rather than through <random> distributions (whose algorithms are
// implementation-defined), so sequences are bit-identical everywhere.
// A sampler must not be shared between threads; give each worker its own
// stream index.
class SeededSampler {
public:
    SeededSampler(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double next_uniform();
    /// Standard normal via the Marsaglia polar method.
    double next_normal();

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace wentropy
