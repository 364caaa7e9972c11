#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace xover {

enum class DiversityGroup : std::uint8_t { k_ones, n_minus_k_ones };

/// One probe of the boundary diversity measure: the largest pairwise Hamming
/// distance among parents with exactly k (or n-k) one-bits, halved.
struct DiversityRecord {
    std::uint64_t iteration = 0;
    DiversityGroup group = DiversityGroup::k_ones;
    double value = 0.0;
    bool in_window = false;

    friend bool operator==(const DiversityRecord&, const DiversityRecord&) = default;
};

/// Outcome of one run of either algorithm. Iteration 0 is the initial
/// population; iteration t is the population after t generations.
struct RunResult {
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t iterations = 0;
    bool success = false;

    // NSGA-II coverage events.
    std::optional<std::uint64_t> inner_cover_iter;
    std::optional<std::uint64_t> first_extremal_iter;
    std::optional<std::uint64_t> second_extremal_iter;
    /// Whether the offspring that first produced 1^n (0^n) came out of a crossover pair.
    std::optional<bool> all_ones_by_crossover;
    std::optional<bool> all_zeros_by_crossover;

    // (mu+1) GA events.
    /// First iteration where every member has exactly n-k one-bits.
    std::optional<std::uint64_t> plateau_iter;
    std::optional<std::uint64_t> optimum_iter;
    std::optional<bool> optimum_by_crossover;

    std::vector<DiversityRecord> diversity;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

}  // namespace xover
