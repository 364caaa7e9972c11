#include "xover/ga.hpp"

#include <stdexcept>
#include <string>

#include "xover/variation.hpp"

namespace xover {

void GaConfig::validate() const {
    spec.validate();
    if (spec.kind != ProblemKind::jump) throw std::invalid_argument("GaConfig: the (mu+1) GA runs on the jump problem");
    if (mu < 1) throw std::invalid_argument("GaConfig: mu must be positive");
    if (!(pc >= 0.0 && pc <= 1.0)) throw std::invalid_argument("GaConfig: pc must be in [0, 1]");
    const double rate = effective_mutation_rate();
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("GaConfig: mutation rate must be in [0, 1]");
}

GaStepEvents ga_step(std::vector<Individual>& population, const GaConfig& config, RngStream& rng) {
    const std::size_t mu = population.size();
    if (mu == 0) throw std::invalid_argument("ga_step: empty population");
    GaStepEvents events;

    Individual child;
    if (rng.bernoulli(config.pc)) {
        events.crossover = true;
        if (mu >= 2) {
            const auto [a, b] = rng.distinct_pair(mu);
            child.genome = uniform_crossover_one(population[a].genome, population[b].genome, rng);
        } else {
            child.genome = population[0].genome;
        }
        child.origin = Origin::crossover;
    } else {
        child.genome = population[rng.below(mu)].genome;
        child.origin = Origin::mutation;
    }
    mutate_in_place(child.genome, config.effective_mutation_rate(), rng);
    evaluate(config.spec, child);

    const auto fitness = [&](std::size_t i) { return i == mu ? child.objectives[0] : population[i].objectives[0]; };
    std::int64_t worst = fitness(mu);
    std::size_t ties = 0;
    for (std::size_t i = 0; i <= mu; ++i) {
        const auto f = fitness(i);
        if (f < worst) {
            worst = f;
            ties = 1;
        } else if (f == worst) {
            ++ties;
        }
    }
    std::size_t pick = ties == 1 ? 0 : rng.below(ties);
    for (std::size_t i = 0; i <= mu; ++i) {
        if (fitness(i) != worst) continue;
        if (pick == 0) {
            events.removed = i;
            break;
        }
        --pick;
    }
    events.removed_fitness = worst;
    if (events.removed != mu) population[events.removed] = std::move(child);
    return events;
}

RunResult ga_run(const GaConfig& config, const GaObserver& observer) {
    config.validate();
    const std::size_t n = config.spec.n;
    RngStream rng(config.seed);
    RunResult result;
    result.seed = config.seed;

    std::vector<Individual> pop(config.mu);
    for (auto& ind : pop) {
        ind.genome = sample_uniform(n, rng);
        evaluate(config.spec, ind);
    }
    result.evaluations = config.mu;

    // Only the slot a surviving child lands in can change between steps.
    // Jump has value n exactly on the n-k plateau.
    const auto plateau_fitness = static_cast<std::int64_t>(n);
    const auto on_plateau = [&](const Individual& m) { return m.objectives[0] == plateau_fitness; };
    std::size_t plateau_members = 0;
    const Individual* best = nullptr;
    for (const auto& m : pop) {
        if (on_plateau(m)) ++plateau_members;
        if (m.genome.all_ones()) best = &m;
    }

    std::uint64_t iteration = 0;
    const auto record = [&]() {
        if (!result.plateau_iter && plateau_members == pop.size()) result.plateau_iter = iteration;
        if (observer) observer(iteration, pop);
    };

    record();
    while (best == nullptr && result.evaluations < config.max_evals) {
        const GaStepEvents events = ga_step(pop, config, rng);
        ++result.evaluations;
        ++iteration;
        if (events.removed != pop.size()) {
            const Individual& fresh = pop[events.removed];
            if (events.removed_fitness == plateau_fitness) --plateau_members;
            if (on_plateau(fresh)) ++plateau_members;
            if (fresh.genome.all_ones()) best = &fresh;
        }
        record();
    }
    result.iterations = iteration;
    result.success = best != nullptr;
    if (best != nullptr) {
        result.optimum_iter = iteration;
        result.optimum_by_crossover = best->origin == Origin::crossover;
    }
    return result;
}

}  // namespace xover
