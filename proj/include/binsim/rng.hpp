#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace binsim {

// Single random stream per simulation run. mt19937_64 output is pinned by the
// standard; the distributions are hand-rolled because std::uniform_*_distribution
// is implementation-defined and would break cross-platform replay.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); returns lo when the interval is empty.
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace binsim
