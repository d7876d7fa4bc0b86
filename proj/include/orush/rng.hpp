#pragma once

// Seeded random numbers for witness searches and property sampling.
// std::mt19937_64 output is pinned by the standard; the bounded draw below
// avoids std::uniform_int_distribution, whose stream is not portable, so a
// fixed seed yields the same samples on every platform.

#include <cstdint>
#include <random>
#include <utility>

namespace orush {

class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], rejection-sampled.
    long uniform(long lo, long hi) {
        if (hi < lo) std::swap(lo, hi);
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long>(next());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    bool coin() { return (next() & 1) != 0; }

    // Independent child stream keyed off the original seed.
    Rng split(uint64_t stream) const {
        return Rng(seed_ ^ (stream * 0x9E3779B97F4A7C15ULL + 0xA0761D6478BD642FULL));
    }

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace orush
