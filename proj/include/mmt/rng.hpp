#pragma once

#include <cmath>
#include <cstdint>

namespace mmt {

// Portable deterministic generator (splitmix64). Chosen over std::mt19937 so
// seeded runs are bit-identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Substream constructor: mixes (seed, stream) so parallel workers get
    // independent deterministic streams.
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(mix(seed) ^ mix(stream ^ 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [-scale, scale].
    double uniform_symmetric(double scale) { return scale * (2.0 * uniform01() - 1.0); }

    // Standard normal via Box-Muller (no cached second value, for simplicity).
    double normal() {
        double u1;
        do { u1 = uniform01(); } while (u1 == 0.0);
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643 * u2);
    }

    // Uniform integer in [lo, hi] inclusive.
    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace mmt
