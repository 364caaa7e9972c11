#pragma once

/// @file nsga2.hpp
/// @brief NSGA-II with two-child uniform crossover and bit-wise mutation.
///
/// Conventions used throughout:
///  - ranks are 1-based, rank 1 is the non-dominated set;
///  - within a front, members sharing an objective value are ordered by a tie
///    key per objective (a fresh random permutation by default, or member
///    index), and only the first and last of that order receive an infinite
///    crowding contribution;
///  - an objective with max == min inside a front contributes 0 to interior members.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "xover/benchmarks.hpp"
#include "xover/individual.hpp"
#include "xover/rng.hpp"
#include "xover/run_result.hpp"

namespace xover {

inline constexpr double infinite_crowding = std::numeric_limits<double>::infinity();

enum class SelectionMethod { fair, uniform, n_tournaments, two_permutation };

/// CLI spellings: fair, uniform, tournament, two-permutation.
[[nodiscard]] std::string_view to_string(SelectionMethod method) noexcept;
/// Throws std::invalid_argument on an unknown name.
[[nodiscard]] SelectionMethod parse_selection(std::string_view name);

struct RankedPopulation {
    std::vector<Individual> members;
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
    /// Critical rank of the survival step that produced this population; 0 for
    /// a population that did not come out of survival selection.
    std::size_t critical_rank = 0;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
};

/// Per-member rank. O(M log M) sweep for two objectives, O(M^2) peeling otherwise.
[[nodiscard]] std::vector<std::size_t> non_dominated_sort(std::span<const ObjectiveVector> objectives);
[[nodiscard]] std::vector<std::size_t> non_dominated_sort(std::span<const Individual> population);

/// Member indices grouped by rank; result[r-1] holds rank r in ascending index order.
[[nodiscard]] std::vector<std::vector<std::size_t>> fronts_from_ranks(std::span<const std::size_t> ranks);

/// Per-objective tie keys: members with equal values in objective j are
/// ordered by ascending keys[j][member]. Empty means member index in every objective.
using TieKeys = std::vector<std::vector<std::size_t>>;

/// How equal objective values are ordered before crowding distances are taken.
enum class CrowdingTies {
    /// Member index within the front, the same order for every objective.
    member_index,
    /// A fresh uniform permutation per objective each time crowding is computed.
    random_per_objective,
};

/// CLI spellings: random, index.
[[nodiscard]] std::string_view to_string(CrowdingTies ties) noexcept;
/// Throws std::invalid_argument on an unknown name.
[[nodiscard]] CrowdingTies parse_crowding_ties(std::string_view name);

/// Crowding distances of one front, in front order.
[[nodiscard]] std::vector<double> crowding_assign(std::span<const ObjectiveVector> front,
                                                  const TieKeys& tie_keys = {});
[[nodiscard]] std::vector<double> crowding_assign(std::span<const Individual> front, const TieKeys& tie_keys = {});

/// One uniform permutation of [0, members) per objective.
[[nodiscard]] TieKeys random_tie_keys(std::size_t members, std::size_t arity, RngStream& rng);

/// Ranks every member and computes crowding distances front by front. A null
/// rng forces member-index ties.
[[nodiscard]] RankedPopulation rank_population(std::vector<Individual> members,
                                               CrowdingTies ties = CrowdingTies::member_index,
                                               RngStream* rng = nullptr);

/// Keeps exactly n members of `combined`: all ranks below the critical rank,
/// then the largest crowding distances of the critical rank with a uniform
/// random choice among equal values at the cut. Survivors keep their relative
/// order from `combined`; the result is re-crowded.
[[nodiscard]] RankedPopulation survival_select(std::vector<Individual> combined, std::size_t n, RngStream& rng,
                                               CrowdingTies ties = CrowdingTies::member_index);

/// Lower rank wins, then larger crowding distance, then a fair coin.
[[nodiscard]] std::size_t binary_tournament(const RankedPopulation& ranked, std::size_t a, std::size_t b,
                                            RngStream& rng);

using ParentPairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// N/2 ordered pairs of member indices. N must be even. For two_permutation
/// with N = 2 mod 4 the leftover winner of each permutation are paired.
[[nodiscard]] ParentPairs select_parent_pairs(const RankedPopulation& ranked, SelectionMethod method,
                                              RngStream& rng);

struct Nsga2Config {
    ProblemSpec spec;
    std::size_t pop_size = 0;
    double pc = 0.9;
    /// Defaults to 1/n.
    std::optional<double> mutation_rate;
    SelectionMethod selection = SelectionMethod::fair;
    CrowdingTies crowding_ties = CrowdingTies::random_per_objective;
    std::uint64_t max_evals = 0;
    std::uint64_t seed = 0;
    /// Verifies the survival and crowding invariants every generation; a
    /// violation throws std::logic_error.
    bool check_invariants = false;

    /// N = c(n - 2k + 3).
    [[nodiscard]] static std::size_t pop_size_for_factor(std::size_t factor, const ProblemSpec& spec) {
        return factor * spec.front_size();
    }
    [[nodiscard]] double effective_mutation_rate() const noexcept {
        return mutation_rate.value_or(1.0 / static_cast<double>(spec.n));
    }
    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

struct StepEvents {
    std::uint64_t evaluations = 0;
    std::size_t crossover_pairs = 0;
};

/// One generation: select N/2 pairs, vary, evaluate N offspring, keep N of the 2N.
StepEvents nsga2_step(RankedPopulation& state, const Nsga2Config& config, RngStream& rng);

/// Called with iteration 0 after initialization and after every generation.
using Nsga2Observer =
    std::function<void(std::uint64_t iteration, const RankedPopulation& population, const FrontCoverage& coverage)>;

/// Runs until the whole front is covered or max_evals is reached. The
/// initial population costs N evaluations; each offspring costs one.
[[nodiscard]] RunResult nsga2_run(const Nsga2Config& config, const Nsga2Observer& observer = {});

/// Number of members with positive crowding distance in each front, paired
/// with the number of distinct objective vectors of that front.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> positive_crowding_counts(
    const RankedPopulation& ranked);

}  // namespace xover
