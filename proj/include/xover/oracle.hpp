#pragma once

/// @file oracle.hpp
/// @brief Brute-force reference implementations used to check the fast paths.
///
/// Nothing here shares sorting or crowding code with nsga2; only BitString,
/// the benchmark functions and dominates() are common.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xover/benchmarks.hpp"
#include "xover/individual.hpp"

namespace xover::oracle {

struct Mismatch {
    std::string input;
    std::string expected;
    std::string actual;
};

struct OracleReport {
    std::size_t cases_run = 0;
    std::vector<Mismatch> mismatches;

    [[nodiscard]] bool passed() const noexcept { return mismatches.empty(); }
    void merge(const OracleReport& other);
};

/// Repeatedly removes the set of members no remaining member dominates.
[[nodiscard]] std::vector<std::size_t> brute_rank(std::span<const ObjectiveVector> objectives);

/// Crowding distances evaluated straight from the definition. Members with
/// equal values in objective j are ordered by ascending tie_keys[j][member]
/// (member index when tie_keys is empty).
[[nodiscard]] std::vector<double> brute_crowding(std::span<const ObjectiveVector> front,
                                                 const std::vector<std::vector<std::size_t>>& tie_keys = {});

/// Non-dominated image of ojzj over all 2^n strings. Rejects n > 16.
[[nodiscard]] std::vector<ObjectiveVector> brute_front(const ProblemSpec& spec);

/// non_dominated_sort vs brute_rank and crowding_assign vs brute_crowding on
/// `cases` random populations of size <= 24 with genomes of length <= max_n.
/// Crowding is checked with member-index ties and with random per-objective keys.
[[nodiscard]] OracleReport verify_sorting(std::size_t cases, std::size_t max_n, std::uint64_t seed);

/// pareto_front vs brute_front for every n in [min_n..max_n] and admissible k.
[[nodiscard]] OracleReport verify_fronts(std::size_t min_n, std::size_t max_n);

}  // namespace xover::oracle
