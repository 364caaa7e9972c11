// Kernel timings: the sweep sorter against the brute-force peeler, and the
// OpenMP experiment runner against its serial reference.

#include <benchmark/benchmark.h>

#include <vector>

#include "xover/benchmarks.hpp"
#include "xover/harness.hpp"
#include "xover/nsga2.hpp"
#include "xover/oracle.hpp"
#include "xover/rng.hpp"

namespace {

std::vector<xover::ObjectiveVector> random_ojzj(std::size_t m, std::size_t n) {
    xover::RngStream rng(7);
    std::vector<xover::ObjectiveVector> f;
    for (std::size_t i = 0; i < m; ++i) f.push_back(xover::ojzj_value(xover::sample_uniform(n, rng), 2));
    return f;
}

void BM_NonDominatedSort(benchmark::State& state) {
    const auto f = random_ojzj(static_cast<std::size_t>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(xover::non_dominated_sort(std::span<const xover::ObjectiveVector>(f)));
}
BENCHMARK(BM_NonDominatedSort)->Arg(98)->Arg(196)->Arg(392)->Arg(776);

void BM_BruteRank(benchmark::State& state) {
    const auto f = random_ojzj(static_cast<std::size_t>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(xover::oracle::brute_rank(f));
}
BENCHMARK(BM_BruteRank)->Arg(98)->Arg(196)->Arg(392);

void BM_CrowdingAssign(benchmark::State& state) {
    const auto f = random_ojzj(static_cast<std::size_t>(state.range(0)), 50);
    for (auto _ : state) benchmark::DoNotOptimize(xover::crowding_assign(std::span<const xover::ObjectiveVector>(f)));
}
BENCHMARK(BM_CrowdingAssign)->Arg(196)->Arg(392);

xover::ExperimentConfig small_sweep() {
    xover::ExperimentConfig cfg;
    cfg.algorithm = xover::Algorithm::nsga2;
    cfg.n = 20;
    cfg.k = 2;
    cfg.pop_sizes = {38, 76};
    cfg.pcs = {0.0, 0.9};
    cfg.reps = 4;
    cfg.base_seed = 11;
    return cfg;
}

void BM_ExperimentSerial(benchmark::State& state) {
    const auto cfg = small_sweep();
    for (auto _ : state) benchmark::DoNotOptimize(xover::run_experiment_serial(cfg));
}
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);

void BM_ExperimentParallel(benchmark::State& state) {
    const auto cfg = small_sweep();
    for (auto _ : state) benchmark::DoNotOptimize(xover::run_experiment(cfg));
}
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
