#include "xover/variation.hpp"

#include <cmath>
#include <stdexcept>

namespace xover {

std::pair<BitString, BitString> uniform_crossover_two(const BitString& x, const BitString& y, RngStream& rng) {
    if (x.size() != y.size()) throw std::invalid_argument("uniform_crossover_two: length mismatch");
    std::pair<BitString, BitString> children{BitString(x.size()), BitString(x.size())};
    auto c1 = children.first.words();
    auto c2 = children.second.words();
    const auto a = x.words();
    const auto b = y.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
        // mask bit 1: first child inherits from x.
        const std::uint64_t mask = rng.next_u64();
        c1[i] = (a[i] & mask) | (b[i] & ~mask);
        c2[i] = (b[i] & mask) | (a[i] & ~mask);
    }
    return children;
}

BitString uniform_crossover_one(const BitString& x, const BitString& y, RngStream& rng) {
    if (x.size() != y.size()) throw std::invalid_argument("uniform_crossover_one: length mismatch");
    BitString child(x.size());
    auto c = child.words();
    const auto a = x.words();
    const auto b = y.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t mask = rng.next_u64();
        c[i] = (a[i] & mask) | (b[i] & ~mask);
    }
    return child;
}

std::size_t mutate_in_place(BitString& x, double rate, RngStream& rng) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("bitwise mutation: rate must be in [0, 1]");
    const std::size_t n = x.size();
    if (rate == 0.0 || n == 0) return 0;
    if (rate == 1.0) {
        x.flip_all();
        return n;
    }
    // Gap to the next flipped position is geometric with success probability `rate`.
    const double log_keep = std::log1p(-rate);
    std::size_t flips = 0;
    std::size_t pos = 0;
    while (true) {
        const double u = 1.0 - rng.uniform01();  // (0, 1]
        const double gap = std::floor(std::log(u) / log_keep);
        if (gap >= static_cast<double>(n - pos)) break;
        pos += static_cast<std::size_t>(gap);
        x.flip(pos);
        ++flips;
        ++pos;
        if (pos >= n) break;
    }
    return flips;
}

BitString bitwise_mutation(BitString x, double rate, RngStream& rng) {
    mutate_in_place(x, rate, rng);
    return x;
}

}  // namespace xover
