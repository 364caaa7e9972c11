#pragma once

/// @file rng.hpp
/// @brief Seeded random streams with a deterministic child-stream derivation.
///
/// Engine: std::mt19937_64. Seeding: the user seed is passed through
/// splitmix64 before it reaches the engine. Derivation:
/// derive(seed, index) = splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15)).
/// Every draw helper is written in terms of raw 64-bit outputs so sequences
/// are identical across standard library implementations.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace xover {

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Pure function of (seed, index); used for every stream and seed derivation.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

/// Single-owner pseudorandom stream. Copying duplicates the state, so two
/// copies produce the same draws; pass by reference.
class RngStream {
public:
    static constexpr std::string_view algorithm = "mt19937_64+splitmix64-derive";

    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    /// Child stream for `index`; depends only on (seed(), index).
    [[nodiscard]] RngStream derive(std::uint64_t index) const { return RngStream(derive_seed(seed_, index)); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// True with probability p. p <= 0 never draws true, p >= 1 always does;
    /// one raw draw is consumed either way.
    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::size_t below(std::size_t bound);

    /// Two distinct uniform indices in [0, bound), ordered as drawn. bound >= 2.
    std::pair<std::size_t, std::size_t> distinct_pair(std::size_t bound);

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = below(i);
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace xover
