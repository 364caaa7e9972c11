#include "xover/rng.hpp"

#include <stdexcept>

namespace xover {

std::size_t RngStream::below(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
    const auto b = static_cast<std::uint64_t>(bound);
    // Rejection on the top of the range removes modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
    std::uint64_t r = next_u64();
    while (r >= limit) r = next_u64();
    return static_cast<std::size_t>(r % b);
}

std::pair<std::size_t, std::size_t> RngStream::distinct_pair(std::size_t bound) {
    if (bound < 2) throw std::invalid_argument("RngStream::distinct_pair: need at least two items");
    const std::size_t first = below(bound);
    std::size_t second = below(bound - 1);
    if (second >= first) ++second;
    return {first, second};
}

}  // namespace xover
