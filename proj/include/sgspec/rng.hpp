#pragma once

#include <cstdint>
#include <initializer_list>

namespace sgspec {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen over the <random>
/// distributions because their output is implementation-defined; every
/// derived quantity below is specified bit-for-bit so seeded campaigns
/// replay identically on any platform.
///
/// - next():       state += 0x9E3779B97F4A7C15, then the mix64 finalizer.
/// - uniform():    top 53 bits of next() scaled by 2^-53, in [0, 1).
/// - below(k):     rejection sampling: redraws while next() >= 2^64 - (2^64 mod k),
///                 then returns the value mod k.
/// - bernoulli(p): uniform() < p.
/// - split(key):   child stream seeded with mix64(next() ^ mix64(key)).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Seed for an independent stream identified by a key path, e.g.
    /// derive(seed, {theorem, sample}). Pure function of its inputs.
    static constexpr std::uint64_t derive(std::uint64_t seed,
                                          std::initializer_list<std::uint64_t> keys) noexcept {
        std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
        for (auto k : keys) h = mix64(h ^ mix64(k + 0x632BE59BD9B4E019ULL));
        return h;
    }

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

    // Uniform integer in [0, k); k must be positive.
    constexpr std::uint64_t below(std::uint64_t k) noexcept {
        const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % k + 1) % k;
        std::uint64_t x = next();
        while (x > limit) x = next();
        return x % k;
    }

    // Uniform integer in [lo, hi].
    constexpr int between(int lo, int hi) noexcept {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    constexpr SplitMix64 split(std::uint64_t key) noexcept {
        return SplitMix64(mix64(next() ^ mix64(key)));
    }

private:
    std::uint64_t state_;
};

} // namespace sgspec
