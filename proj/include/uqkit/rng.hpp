#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace uqkit::rng {

// Counter-based generator (splitmix64 finalizer over an affine counter).
// Draw i of stream s under a seed is a pure function of (seed, s, i), so
// sequences can be filled in any order and on any number of threads while
// producing identical bytes.

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Key identifying one logical stream of a seed.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) {
    return mix(seed + (stream + 1) * kGamma);
}

inline std::uint64_t bits_at(std::uint64_t key, std::uint64_t index) {
    return mix(key + index * kGamma);
}

// Uniform on (0, 1]; never returns zero, so log() is safe.
inline double uniform_pos(std::uint64_t key, std::uint64_t index) {
    return static_cast<double>((bits_at(key, index) >> 11) + 1) * 0x1.0p-53;
}

struct NormalPair {
    double z1;
    double z2;
};

// Standard normal pair via Box-Muller from counters (2i, 2i+1).
inline NormalPair normal_pair(std::uint64_t key, std::uint64_t pair_index) {
    const double u1 = uniform_pos(key, 2 * pair_index);
    const double u2 = uniform_pos(key, 2 * pair_index + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

// Unit-rate exponential deviate.
inline double exponential(std::uint64_t key, std::uint64_t index) {
    return -std::log(uniform_pos(key, index));
}

}  // namespace uqkit::rng
