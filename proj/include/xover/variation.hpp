#pragma once

/// @file variation.hpp
/// @brief Uniform crossover (one and two children) and standard bit-wise mutation.

#include <utility>

#include "xover/bitstring.hpp"
#include "xover/rng.hpp"

namespace xover {

/// Two-child uniform crossover: per position the first child takes x's bit
/// with probability 1/2 and y's otherwise; the second child takes the other
/// parent's bit. Throws std::invalid_argument on a length mismatch.
[[nodiscard]] std::pair<BitString, BitString> uniform_crossover_two(const BitString& x, const BitString& y,
                                                                  RngStream& rng);

/// Single-child uniform crossover; same per-position law as the first child above.
[[nodiscard]] BitString uniform_crossover_one(const BitString& x, const BitString& y, RngStream& rng);

/// Flips each bit independently with probability `rate` in place. Flip
/// positions are drawn by geometric skipping, so the cost is proportional to
/// the number of flips. Returns that number.
std::size_t mutate_in_place(BitString& x, double rate, RngStream& rng);

/// Value form of mutate_in_place. Throws std::invalid_argument unless rate is in [0, 1].
[[nodiscard]] BitString bitwise_mutation(BitString x, double rate, RngStream& rng);

}  // namespace xover
