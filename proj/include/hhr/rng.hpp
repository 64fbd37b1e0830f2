#pragma once

#include <cstdint>

namespace hhr {

// splitmix64 (Steele/Lea/Flood mix). Every seeded operation in the library
// draws from this generator so that identical seeds give bit-identical
// objects across platforms and runs.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // One Bernoulli(prob) trial. Always advances the stream exactly once;
    // prob is scaled to the full 64-bit range, so dyadic probabilities are
    // compared exactly.
    bool chance(double prob) {
        const std::uint64_t draw = next();
        if (prob <= 0.0) return false;
        if (prob >= 1.0) return true;
        const auto threshold =
            static_cast<std::uint64_t>(static_cast<long double>(prob) * 18446744073709551616.0L);
        return draw < threshold;
    }

    // Uniform draw from [0, bound). bound must be positive. Modulo bias is
    // negligible for the desk-scale bounds used here and keeps the stream
    // advance at exactly one draw.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Sub-seed for trial `index` of a seeded batch.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64(master + index).next();
}

} // namespace hhr
