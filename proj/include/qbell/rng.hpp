#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qbell {

// Deterministic source of randomness.
//
// The engine is std::mt19937_64, whose output sequence the standard pins
// bit-exactly. The value transforms live here instead of coming from
// <random> distributions, whose outputs differ between standard libraries:
//
//   uniform01: top 53 bits of one engine draw, scaled by 2^-53  -> [0, 1)
//   normal:    Box-Muller on two uniforms, cosine branch only
//
// Identical seeds therefore produce identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double normal() {
        // First uniform shifted into (0, 1] so the log is finite.
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer over seed and stream index; derives independent
// substream seeds deterministically from one master seed.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace qbell
