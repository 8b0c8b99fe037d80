#pragma once

// Seeded, platform-independent randomness.
//
// The generator is SplitMix64 (64-bit state, increment 0x9E3779B97F4A7C15,
// Stafford variant 13 output mix). Worker/instance streams are derived with
// `Rng::stream(seed, index)`, which seeds a fresh SplitMix64 from
// mix(seed) XOR mix(index + 1), so stream i never depends on how many values
// other streams consumed. Bounded integers use rejection sampling and never a
// std:: distribution, whose output is implementation-defined.

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace cubegeo {

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    using result_type = std::uint64_t;

    explicit constexpr Rng(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64_mix(seed) ^ splitmix64_mix(index + 1));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    // Uniform on [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Fisher-Yates; every permutation is equally likely given uniform words.
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace cubegeo
