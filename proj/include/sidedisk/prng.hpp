#pragma once

// Deterministic randomness for generators and campaigns.
//
// The generator is SplitMix64 (Steele, Lea, Flood; the finalizer is the
// murmur-style mix used in Vigna's reference implementation).  It is
// counter-based in the sense documented in the README: the i-th derived
// stream of a campaign with master seed S is seeded with
// mix64(S + (i+1) * 0x9E3779B97F4A7C15), and draws within a stream advance
// the SplitMix64 state sequentially.  Anyone can reproduce every corpus
// from the seed alone with ~15 lines of code in any language.

#include <cstdint>

#include "sidedisk/scalar.hpp"

namespace sidedisk {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += kGolden;
        return mix64(state);
    }

    // Uniform in [lo, hi] via modulo reduction (documented; the tiny modulo
    // bias is irrelevant for property sampling and keeps the stream spec
    // trivial to reimplement).
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Rational in [lo, hi]-ish grid: numerator uniform, denominator in [1, max_den].
    Rat next_rat(std::int64_t lo_num, std::int64_t hi_num, std::int64_t max_den = 1) {
        const std::int64_t num = next_in(lo_num, hi_num);
        const std::int64_t den = max_den <= 1 ? 1 : next_in(1, max_den);
        Rat v(static_cast<long>(num), static_cast<long>(den));
        v.canonicalize();
        return v;
    }

    // Strictly positive rational in (0, hi] with denominator <= max_den.
    Rat next_pos_rat(std::int64_t hi, std::int64_t max_den = 16) {
        const std::int64_t den = next_in(1, max_den);
        const std::int64_t num = next_in(1, hi * den);
        Rat v(static_cast<long>(num), static_cast<long>(den));
        v.canonicalize();
        return v;
    }
};

// Seed of the i-th derived stream of master seed `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

}  // namespace sidedisk
