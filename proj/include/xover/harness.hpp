#pragma once

/// @file harness.hpp
/// @brief Sweeps of repeated runs, aggregation and the table presets.
///
/// Repetitions are independent and are the parallel axis: run_experiment
/// distributes (cell, rep) tasks over OpenMP threads, each with its own
/// derived seed, and stores results by position so the output does not
/// depend on scheduling. run_experiment_serial is the plain loop kept as the
/// reference the parallel path is tested against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xover/benchmarks.hpp"
#include "xover/nsga2.hpp"
#include "xover/run_result.hpp"

namespace xover {

enum class Algorithm { nsga2, ga };

[[nodiscard]] std::string_view to_string(Algorithm algorithm) noexcept;

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::nsga2;
    std::size_t n = 0;
    std::size_t k = 0;
    /// Swept NSGA-II population sizes N.
    std::vector<std::size_t> pop_sizes;
    /// Swept (mu+1) GA population sizes.
    std::vector<std::size_t> mus;
    std::vector<double> pcs{0.9};
    SelectionMethod selection = SelectionMethod::fair;
    CrowdingTies crowding_ties = CrowdingTies::random_per_objective;
    std::optional<double> mutation_rate;
    std::size_t reps = 10;
    std::uint64_t base_seed = 0;
    /// Per-run budget; a generous default is derived per cell when unset.
    std::optional<std::uint64_t> max_evals;
    bool probe_diversity = false;
    bool check_invariants = false;
    /// OpenMP thread count; 0 keeps the runtime default.
    int threads = 0;

    void validate() const;
};

/// One point of the sweep.
struct Cell {
    std::size_t index = 0;
    Algorithm algorithm = Algorithm::nsga2;
    ProblemSpec spec;
    /// N for NSGA-II, mu for the GA.
    std::size_t pop_size = 0;
    double pc = 0.9;
    SelectionMethod selection = SelectionMethod::fair;
    CrowdingTies crowding_ties = CrowdingTies::random_per_objective;
    std::optional<double> mutation_rate;
    std::uint64_t max_evals = 0;

    [[nodiscard]] std::string label() const;
};

struct CellSummary {
    std::size_t reps = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;
    /// Over successful runs only; std is the n-1 estimator and needs two of them.
    std::optional<double> mean_evaluations;
    std::optional<double> std_evaluations;
    /// Over runs that produced at least one in-window diversity record.
    std::optional<double> diversity_mean;
    std::optional<double> diversity_std;
    std::size_t diversity_runs = 0;
};

struct CellResult {
    Cell cell;
    CellSummary summary;
    std::vector<RunResult> runs;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<CellResult> cells;
};

/// Cells in sweep order: population size outer, pc inner.
[[nodiscard]] std::vector<Cell> expand_cells(const ExperimentConfig& config);

/// Per-run budget: 100 N n^k for NSGA-II, 100 e n^k max(mu, 2) for the GA, capped at 1e18.
[[nodiscard]] std::uint64_t default_max_evals(Algorithm algorithm, std::size_t n, std::size_t k, std::size_t pop_size);

/// derive_seed(derive_seed(base, cell), rep).
[[nodiscard]] std::uint64_t run_seed(std::uint64_t base_seed, std::size_t cell, std::size_t rep) noexcept;

[[nodiscard]] Nsga2Config nsga2_config_for(const Cell& cell, std::uint64_t seed, bool check_invariants);

/// One repetition of one cell, with diversity probing when requested.
[[nodiscard]] RunResult run_single(const Cell& cell, std::size_t rep, const ExperimentConfig& config);

[[nodiscard]] CellSummary summarize(const std::vector<RunResult>& runs);

/// Validates every cell first; a rejected cell throws std::invalid_argument naming it.
[[nodiscard]] ExperimentResult run_experiment(const ExperimentConfig& config);
[[nodiscard]] ExperimentResult run_experiment_serial(const ExperimentConfig& config);

enum class TablePreset { table1, table2, fig1, fig2 };

/// Accepts 1, 2, fig1, fig2.
[[nodiscard]] TablePreset parse_preset(std::string_view which);
[[nodiscard]] std::string preset_name(TablePreset preset);
[[nodiscard]] ExperimentConfig preset_config(TablePreset preset, std::uint64_t seed);

}  // namespace xover
