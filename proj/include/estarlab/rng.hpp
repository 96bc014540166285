#pragma once

#include <cstdint>

namespace estarlab {

/// SplitMix64. Hand-rolled so that seeded corpora are bit-identical across
/// standard libraries and platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound ≥ 1. Rejection-free multiply-shift is
    /// fine here; bounds are tiny compared to 2^64.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

/// Independent stream for (seed, draw) pairs.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t draw) {
    SplitMix64 mixer(seed ^ (draw * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
    mixer.next();
    return mixer;
}

}  // namespace estarlab
