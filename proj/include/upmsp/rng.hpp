#pragma once

#include <cstdint>
#include <vector>

namespace upmsp {

// 64-bit finalizer from splitmix64 (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based draw keyed by (seed, stream, index). Any field of an
// instance can be generated independently of evaluation order, which keeps
// generation reproducible across implementations.
inline std::uint64_t keyed_draw(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index) {
    std::uint64_t key = mix64(seed ^ (stream * 0xD1B54A32D192ED03ULL));
    return mix64(key + index * 0x8CB92BA72F3D8DD7ULL);
}

// Sequential splitmix64 stream. Used everywhere a stateful RNG is needed
// (SA trajectory, shuffles); instances use keyed_draw instead.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Multiply-shift mapping; the bias is
    // below 2^-40 for every bound used here.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    // Uniform in [lo, hi] inclusive.
    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace upmsp
