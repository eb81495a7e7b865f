#pragma once

#include <cstdint>

namespace backedge {

// SplitMix64 (Steele, Lea, Vigna). Chosen over <random> engines so that a
// seed produces the same stream on every platform and toolchain; bounded
// draws use plain modulo reduction for the same reason.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [0, bound); bound must be positive.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

    // Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

} // namespace backedge
