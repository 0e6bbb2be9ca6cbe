#pragma once

#include <cstdint>

namespace ionsaddles {

/// splitmix64: tiny, statistically solid, and trivially seedable per stream.
/// Each search start owns an independent stream keyed by (seed, start index),
/// which keeps runs bitwise reproducible for any worker count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed);
        std::uint64_t s = mix.next() ^ (index * 0x9e3779b97f4a7c15ULL);
        SplitMix64 hash(s);
        return SplitMix64(hash.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace ionsaddles
