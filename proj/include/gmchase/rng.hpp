#pragma once

#include <cstdint>

namespace gmchase {

// splitmix64 (Vigna): state advances by the golden-ratio increment, each
// output is the mixed state. Fully specified here, so a 64-bit seed
// determines the same stream on every platform.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    // Unbiased draw from [0, n) by rejection; n >= 1.
    constexpr std::uint64_t below(std::uint64_t n) noexcept {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        std::uint64_t draw = next();
        while (draw < threshold) draw = next();
        return draw % n;
    }

private:
    std::uint64_t state_;
};

// Counter-mode stream splitting: stream `index` of a run with master seed
// `master` is seeded with this value. A pure function of (master, index),
// so worker count and aggregation order cannot affect results.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master + (index + 1) * kGoldenGamma);
}

}  // namespace gmchase
