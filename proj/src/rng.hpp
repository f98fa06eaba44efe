#pragma once

#include <cstdint>

namespace trilength {

/// Deterministic 64-bit generator used for all randomized corpora, so that a
/// given seed reproduces the same graphs and parameters on every platform.
///
/// This is SplitMix64 (Steele, Lea, Flood 2014): state advances by the golden
/// gamma 0x9e3779b97f4a7c15 and the output is finalized with the two
/// xor-shift-multiply rounds below.  Chosen over std::mt19937 because the
/// algorithm is short enough to restate here, which pins the byte-exact
/// behaviour independent of any standard-library implementation.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) by rejection, bias-free.
    uint64_t next_below(uint64_t bound) {
        // Largest multiple of bound that fits in 64 bits.
        uint64_t limit = bound * ((~0ull) / bound);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    uint64_t state_;
};

} // namespace trilength
