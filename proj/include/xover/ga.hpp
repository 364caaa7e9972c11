#pragma once

/// @file ga.hpp
/// @brief Steady-state (mu+1) GA on Jump.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xover/benchmarks.hpp"
#include "xover/individual.hpp"
#include "xover/rng.hpp"
#include "xover/run_result.hpp"

namespace xover {

struct GaConfig {
    ProblemSpec spec{ProblemKind::jump, 0, 0};
    std::size_t mu = 2;
    double pc = 0.9;
    /// Defaults to 1/n.
    std::optional<double> mutation_rate;
    std::uint64_t max_evals = 0;
    std::uint64_t seed = 0;

    [[nodiscard]] double effective_mutation_rate() const noexcept {
        return mutation_rate.value_or(1.0 / static_cast<double>(spec.n));
    }
    /// Throws std::invalid_argument describing the first problem found.
    void validate() const;
};

struct GaStepEvents {
    bool crossover = false;
    /// Index in the μ+1 candidate list that was removed; μ means the child.
    std::size_t removed = 0;
    std::int64_t removed_fitness = 0;
};

/// One generation: create one child (crossover of two distinct uniform
/// parents then mutation with probability pc, mutation of one uniform parent
/// otherwise), then remove a uniformly chosen worst of the mu+1 candidates.
/// A surviving child takes the removed member's slot.
/// With mu = 1 a crossover step pairs the single member with itself.
GaStepEvents ga_step(std::vector<Individual>& population, const GaConfig& config, RngStream& rng);

using GaObserver = std::function<void(std::uint64_t iteration, std::span<const Individual> population)>;

/// Runs until some member is 1^n or max_evals is reached. Initialization
/// costs mu evaluations; each generation costs one.
[[nodiscard]] RunResult ga_run(const GaConfig& config, const GaObserver& observer = {});

}  // namespace xover
