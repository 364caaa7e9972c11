#pragma once

/// @file diversity.hpp
/// @brief Boundary diversity probe over the k and n-k one-bit groups.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xover/benchmarks.hpp"
#include "xover/individual.hpp"
#include "xover/run_result.hpp"

namespace xover {

/// floor(n^k / 50), at least 1.
[[nodiscard]] std::uint64_t probe_interval(std::size_t n, std::size_t k) noexcept;

/// Largest pairwise Hamming distance among the genomes, halved; 0 for fewer than two.
[[nodiscard]] double half_max_hamming(std::span<const BitString* const> group);

/// One record per group (k ones first, then n-k ones). A record is in the
/// window iff the inner front is covered and no extremal point is present
/// now or was seen earlier (`extremal_seen`).
[[nodiscard]] std::vector<DiversityRecord> diversity_probe(std::uint64_t iteration,
                                                           std::span<const Individual> population,
                                                           const ProblemSpec& spec, const FrontCoverage& coverage,
                                                           bool extremal_seen = false);

/// Mean of the in-window values of both groups together; nullopt if none.
[[nodiscard]] std::optional<double> windowed_mean(std::span<const DiversityRecord> trace);

}  // namespace xover
