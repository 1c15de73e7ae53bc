#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace ucc::rng {

// std::mt19937_64 output is fully specified by the standard, but the std
// distributions are not; the transforms below are spelled out so that a given
// seed produces the same stream on every compiler.

/// Uniform double in [0, 1) with 53 random bits.
inline double unit53(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * unit53(eng);
}

/// Standard normal via Box-Muller; consumes two engine draws per value.
inline double gaussian(std::mt19937_64& eng) {
    double u1 = 1.0 - unit53(eng);  // (0, 1] keeps the log finite
    double u2 = unit53(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// SplitMix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Engine for substream `index` of a base seed.  Distinct indices give
/// decorrelated streams, and the mapping is order-independent.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix(seed ^ mix(index)));
}

}  // namespace ucc::rng
