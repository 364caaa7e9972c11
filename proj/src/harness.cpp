#include "xover/harness.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "xover/diversity.hpp"
#include "xover/ga.hpp"
#include "xover/rng.hpp"

namespace xover {

std::string_view to_string(Algorithm algorithm) noexcept {
    return algorithm == Algorithm::nsga2 ? "nsga2" : "ga";
}

void ExperimentConfig::validate() const {
    if (reps < 1) throw std::invalid_argument("ExperimentConfig: reps must be at least 1");
    if (pcs.empty()) throw std::invalid_argument("ExperimentConfig: no pc values");
    if (algorithm == Algorithm::nsga2 && pop_sizes.empty()) {
        throw std::invalid_argument("ExperimentConfig: no population sizes");
    }
    if (algorithm == Algorithm::ga && mus.empty()) throw std::invalid_argument("ExperimentConfig: no mu values");
}

std::string Cell::label() const {
    std::ostringstream os;
    os << "cell " << index << " (" << to_string(algorithm) << " n=" << spec.n << " k=" << spec.k
       << (algorithm == Algorithm::nsga2 ? " N=" : " mu=") << pop_size << " pc=" << pc;
    if (algorithm == Algorithm::nsga2) os << " selection=" << to_string(selection);
    os << ")";
    return os.str();
}

std::vector<Cell> expand_cells(const ExperimentConfig& config) {
    std::vector<Cell> cells;
    const auto& sizes = config.algorithm == Algorithm::nsga2 ? config.pop_sizes : config.mus;
    const ProblemKind kind = config.algorithm == Algorithm::nsga2 ? ProblemKind::ojzj : ProblemKind::jump;
    for (const std::size_t size : sizes) {
        for (const double pc : config.pcs) {
            Cell c;
            c.index = cells.size();
            c.algorithm = config.algorithm;
            c.spec = {kind, config.n, config.k};
            c.pop_size = size;
            c.pc = pc;
            c.selection = config.selection;
            c.crowding_ties = config.crowding_ties;
            c.mutation_rate = config.mutation_rate;
            c.max_evals = config.max_evals.value_or(default_max_evals(config.algorithm, config.n, config.k, size));
            cells.push_back(c);
        }
    }
    return cells;
}

std::uint64_t default_max_evals(Algorithm algorithm, std::size_t n, std::size_t k, std::size_t pop_size) {
    const double waiting = std::pow(static_cast<double>(n), static_cast<double>(k));
    const double size = static_cast<double>(pop_size);
    const double budget = algorithm == Algorithm::nsga2 ? 100.0 * size * waiting
                                                        : 100.0 * std::exp(1.0) * waiting * std::max(size, 2.0);
    constexpr double cap = 1e18;
    return static_cast<std::uint64_t>(std::min(budget, cap));
}

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t cell, std::size_t rep) noexcept {
    return derive_seed(derive_seed(base_seed, cell), rep);
}

Nsga2Config nsga2_config_for(const Cell& cell, std::uint64_t seed, bool check_invariants) {
    Nsga2Config cfg;
    cfg.spec = cell.spec;
    cfg.pop_size = cell.pop_size;
    cfg.pc = cell.pc;
    cfg.mutation_rate = cell.mutation_rate;
    cfg.selection = cell.selection;
    cfg.max_evals = cell.max_evals;
    cfg.seed = seed;
    cfg.check_invariants = check_invariants;
    cfg.crowding_ties = cell.crowding_ties;
    return cfg;
}

namespace {

GaConfig ga_config_for(const Cell& cell, std::uint64_t seed) {
    GaConfig cfg;
    cfg.spec = cell.spec;
    cfg.mu = cell.pop_size;
    cfg.pc = cell.pc;
    cfg.mutation_rate = cell.mutation_rate;
    cfg.max_evals = cell.max_evals;
    cfg.seed = seed;
    return cfg;
}

void validate_cell(const Cell& cell) {
    try {
        if (cell.algorithm == Algorithm::nsga2) {
            nsga2_config_for(cell, 0, false).validate();
        } else {
            ga_config_for(cell, 0).validate();
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(cell.label() + ": " + e.what());
    }
}

}  // namespace

RunResult run_single(const Cell& cell, std::size_t rep, const ExperimentConfig& config) {
    const std::uint64_t seed = run_seed(config.base_seed, cell.index, rep);
    if (cell.algorithm == Algorithm::ga) return ga_run(ga_config_for(cell, seed));

    const Nsga2Config cfg = nsga2_config_for(cell, seed, config.check_invariants);
    if (!config.probe_diversity) return nsga2_run(cfg);

    const std::uint64_t interval = probe_interval(cell.spec.n, cell.spec.k);
    std::vector<DiversityRecord> trace;
    bool extremal_seen = false;
    const Nsga2Observer probe = [&](std::uint64_t iteration, const RankedPopulation& pop, const FrontCoverage& cov) {
        if (iteration % interval == 0) {
            for (auto& r : diversity_probe(iteration, pop.members, cell.spec, cov, extremal_seen)) trace.push_back(r);
        }
        if (cov.extremal_found() != ExtremalFound::none) extremal_seen = true;
    };
    RunResult result = nsga2_run(cfg, probe);
    result.diversity = std::move(trace);
    return result;
}

namespace {

std::pair<double, std::optional<double>> mean_std(const std::vector<double>& xs) {
    double sum = 0.0;
    for (const double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return {mean, std::nullopt};
    double ss = 0.0;
    for (const double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

}  // namespace

CellSummary summarize(const std::vector<RunResult>& runs) {
    CellSummary s;
    s.reps = runs.size();
    std::vector<double> evals;
    std::vector<double> diversity;
    for (const auto& r : runs) {
        if (r.success) evals.push_back(static_cast<double>(r.evaluations));
        if (const auto d = windowed_mean(r.diversity)) diversity.push_back(*d);
    }
    s.successes = evals.size();
    s.success_rate = runs.empty() ? 0.0 : static_cast<double>(s.successes) / static_cast<double>(runs.size());
    if (!evals.empty()) std::tie(s.mean_evaluations, s.std_evaluations) = mean_std(evals);
    s.diversity_runs = diversity.size();
    if (!diversity.empty()) std::tie(s.diversity_mean, s.diversity_std) = mean_std(diversity);
    return s;
}

namespace {

ExperimentResult run_impl(const ExperimentConfig& config, bool parallel) {
    config.validate();
    const auto cells = expand_cells(config);
    for (const auto& c : cells) validate_cell(c);

    const std::size_t reps = config.reps;
    const std::size_t tasks = cells.size() * reps;
    std::vector<RunResult> slots(tasks);
    std::vector<std::exception_ptr> errors(tasks);

    if (parallel) {
        const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks); ++t) {
            const auto task = static_cast<std::size_t>(t);
            try {
                slots[task] = run_single(cells[task / reps], task % reps, config);
            } catch (...) {
                errors[task] = std::current_exception();
            }
        }
    } else {
        for (std::size_t task = 0; task < tasks; ++task) {
            try {
                slots[task] = run_single(cells[task / reps], task % reps, config);
            } catch (...) {
                errors[task] = std::current_exception();
            }
        }
    }

    for (std::size_t task = 0; task < tasks; ++task) {
        if (!errors[task]) continue;
        try {
            std::rethrow_exception(errors[task]);
        } catch (const std::exception& e) {
            throw std::runtime_error(cells[task / reps].label() + " rep " + std::to_string(task % reps) + ": " +
                                     e.what());
        }
    }

    ExperimentResult out;
    out.config = config;
    for (const auto& c : cells) {
        CellResult cr;
        cr.cell = c;
        for (std::size_t rep = 0; rep < reps; ++rep) cr.runs.push_back(std::move(slots[c.index * reps + rep]));
        cr.summary = summarize(cr.runs);
        out.cells.push_back(std::move(cr));
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) { return run_impl(config, true); }

ExperimentResult run_experiment_serial(const ExperimentConfig& config) { return run_impl(config, false); }

TablePreset parse_preset(std::string_view which) {
    if (which == "1") return TablePreset::table1;
    if (which == "2") return TablePreset::table2;
    if (which == "fig1") return TablePreset::fig1;
    if (which == "fig2") return TablePreset::fig2;
    throw std::invalid_argument("unknown preset: " + std::string(which));
}

std::string preset_name(TablePreset preset) {
    switch (preset) {
        case TablePreset::table1: return "table1";
        case TablePreset::table2: return "table2";
        case TablePreset::fig1: return "fig1";
        case TablePreset::fig2: return "fig2";
    }
    return "table1";
}

ExperimentConfig preset_config(TablePreset preset, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.base_seed = seed;
    cfg.reps = 10;
    switch (preset) {
        case TablePreset::table1:
        case TablePreset::table2: {
            cfg.algorithm = Algorithm::nsga2;
            cfg.n = preset == TablePreset::table1 ? 50 : 100;
            cfg.k = 2;
            const ProblemSpec spec{ProblemKind::ojzj, cfg.n, cfg.k};
            cfg.pop_sizes = {Nsga2Config::pop_size_for_factor(2, spec), Nsga2Config::pop_size_for_factor(4, spec)};
            cfg.pcs = {0.0, 0.9};
            cfg.selection = SelectionMethod::fair;
            cfg.probe_diversity = preset == TablePreset::table1;
            break;
        }
        case TablePreset::fig1:
        case TablePreset::fig2: {
            cfg.algorithm = Algorithm::ga;
            cfg.n = preset == TablePreset::fig1 ? 100 : 1000;
            cfg.k = 4;
            const int lo = preset == TablePreset::fig1 ? 0 : 5;
            const int hi = preset == TablePreset::fig1 ? 9 : 11;
            for (int i = lo; i <= hi; ++i) cfg.mus.push_back(std::size_t{1} << i);
            cfg.pcs = {0.9};
            break;
        }
    }
    return cfg;
}

}  // namespace xover
