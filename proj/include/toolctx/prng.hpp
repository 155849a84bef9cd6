#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace toolctx {

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// SplitMix64: the single PRNG behind every seeded operation in this project.
// It is a counter-based generator (state advances by a fixed gamma), so the
// sequence for a given seed is identical on every platform and trivially
// reproducible in other languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    // Derive an independent stream for a named sub-purpose of a seed.
    static SplitMix64 stream(std::uint64_t seed, std::string_view label) {
        SplitMix64 mixer(seed ^ fnv1a64(label));
        return SplitMix64(mixer.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased-enough integer in [0, n) via 128-bit multiply-shift.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[next_below(pool.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = next_below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace toolctx
