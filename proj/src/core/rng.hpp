#pragma once

#include <cstdint>
#include <random>

namespace connmass {

// All randomness in the library flows through this header. The engine is
// std::mt19937_64 (fully specified by the standard) and the uniform/normal
// transforms are hand-rolled, so streams are reproducible across platforms
// and standard libraries for a given seed.

uint64_t splitmix64(uint64_t& state) noexcept;

// Deterministic per-stream seed derivation. Chunked Monte Carlo loops give
// every chunk its own stream; results are then independent of how chunks are
// scheduled across threads.
uint64_t derive_seed(uint64_t root, uint64_t stream) noexcept;

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via the polar (Marsaglia) method.
    double normal();

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace connmass
