#pragma once

#include <cstdint>

namespace tt {

// SplitMix64 (Steele/Lea/Flood) — tiny, seedable, reproducible across
// platforms. Used everywhere random test/CLI inputs are needed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 1) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53 random bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
};

}  // namespace tt
