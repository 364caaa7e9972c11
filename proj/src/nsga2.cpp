#include "xover/nsga2.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "xover/variation.hpp"

namespace xover {

std::string_view to_string(SelectionMethod method) noexcept {
    switch (method) {
        case SelectionMethod::fair: return "fair";
        case SelectionMethod::uniform: return "uniform";
        case SelectionMethod::n_tournaments: return "tournament";
        case SelectionMethod::two_permutation: return "two-permutation";
    }
    return "fair";
}

SelectionMethod parse_selection(std::string_view name) {
    if (name == "fair") return SelectionMethod::fair;
    if (name == "uniform") return SelectionMethod::uniform;
    if (name == "tournament") return SelectionMethod::n_tournaments;
    if (name == "two-permutation") return SelectionMethod::two_permutation;
    throw std::invalid_argument("unknown selection method: " + std::string(name));
}

std::string_view to_string(CrowdingTies ties) noexcept {
    return ties == CrowdingTies::member_index ? "index" : "random";
}

CrowdingTies parse_crowding_ties(std::string_view name) {
    if (name == "random") return CrowdingTies::random_per_objective;
    if (name == "index") return CrowdingTies::member_index;
    throw std::invalid_argument("unknown crowding tie order: " + std::string(name));
}

namespace {

std::vector<ObjectiveVector> objectives_of(std::span<const Individual> population) {
    std::vector<ObjectiveVector> out;
    out.reserve(population.size());
    for (const auto& ind : population) {
        if (!ind.evaluated) throw std::invalid_argument("unevaluated individual");
        out.push_back(ind.objectives);
    }
    return out;
}

std::vector<std::size_t> sort_two_objectives(std::span<const ObjectiveVector> f) {
    std::vector<std::size_t> order(f.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (f[a][0] != f[b][0]) return f[a][0] > f[b][0];
        if (f[a][1] != f[b][1]) return f[a][1] > f[b][1];
        return a < b;
    });
    // Every point already placed precedes p in the order, so the last point
    // added to a front dominates p iff some point of that front does.
    std::vector<std::size_t> last;
    std::vector<std::size_t> rank(f.size(), 0);
    for (const std::size_t p : order) {
        std::size_t lo = 0;
        std::size_t hi = last.size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (dominates(f[last[mid]], f[p])) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo == last.size()) {
            last.push_back(p);
        } else {
            last[lo] = p;
        }
        rank[p] = lo + 1;
    }
    return rank;
}

std::vector<std::size_t> sort_by_peeling(std::span<const ObjectiveVector> f) {
    const std::size_t m = f.size();
    std::vector<std::size_t> dominated_by(m, 0);
    std::vector<std::vector<std::size_t>> dominates_list(m);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p + 1; q < m; ++q) {
            if (dominates(f[p], f[q])) {
                dominates_list[p].push_back(q);
                ++dominated_by[q];
            } else if (dominates(f[q], f[p])) {
                dominates_list[q].push_back(p);
                ++dominated_by[p];
            }
        }
    }
    std::vector<std::size_t> rank(m, 0);
    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < m; ++p) {
        if (dominated_by[p] == 0) current.push_back(p);
    }
    std::size_t r = 1;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (const std::size_t p : current) {
            rank[p] = r;
            for (const std::size_t q : dominates_list[p]) {
                if (--dominated_by[q] == 0) next.push_back(q);
            }
        }
        current = std::move(next);
        ++r;
    }
    return rank;
}

}  // namespace

std::vector<std::size_t> non_dominated_sort(std::span<const ObjectiveVector> objectives) {
    if (objectives.empty()) return {};
    const std::size_t arity = objectives.front().size();
    for (const auto& v : objectives) {
        if (v.size() != arity) throw std::invalid_argument("non_dominated_sort: mixed objective arity");
    }
    return arity == 2 ? sort_two_objectives(objectives) : sort_by_peeling(objectives);
}

std::vector<std::size_t> non_dominated_sort(std::span<const Individual> population) {
    const auto f = objectives_of(population);
    return non_dominated_sort(std::span<const ObjectiveVector>(f));
}

std::vector<std::vector<std::size_t>> fronts_from_ranks(std::span<const std::size_t> ranks) {
    std::vector<std::vector<std::size_t>> fronts;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] == 0) throw std::invalid_argument("fronts_from_ranks: rank 0");
        if (ranks[i] > fronts.size()) fronts.resize(ranks[i]);
        fronts[ranks[i] - 1].push_back(i);
    }
    return fronts;
}

std::vector<double> crowding_assign(std::span<const ObjectiveVector> front, const TieKeys& tie_keys) {
    const std::size_t m = front.size();
    std::vector<double> crowding(m, 0.0);
    if (m == 0) return crowding;
    const std::size_t arity = front.front().size();
    std::vector<std::size_t> order(m);
    for (std::size_t j = 0; j < arity; ++j) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (tie_keys.empty()) {
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return front[a][j] < front[b][j]; });
        } else {
            const auto& key = tie_keys[j];
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return front[a][j] < front[b][j] || (front[a][j] == front[b][j] && key[a] < key[b]);
            });
        }
        crowding[order.front()] = infinite_crowding;
        crowding[order.back()] = infinite_crowding;
        const std::int64_t lo = front[order.front()][j];
        const std::int64_t hi = front[order.back()][j];
        if (hi == lo) continue;
        const auto span = static_cast<double>(hi - lo);
        for (std::size_t i = 1; i + 1 < m; ++i) {
            const auto gap = static_cast<double>(front[order[i + 1]][j] - front[order[i - 1]][j]);
            crowding[order[i]] += gap / span;
        }
    }
    return crowding;
}

std::vector<double> crowding_assign(std::span<const Individual> front, const TieKeys& tie_keys) {
    const auto f = objectives_of(front);
    return crowding_assign(std::span<const ObjectiveVector>(f), tie_keys);
}

TieKeys random_tie_keys(std::size_t members, std::size_t arity, RngStream& rng) {
    TieKeys keys(arity, std::vector<std::size_t>(members));
    for (auto& key : keys) {
        std::iota(key.begin(), key.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(key));
    }
    return keys;
}

namespace {

TieKeys tie_keys_for(std::size_t members, std::size_t arity, CrowdingTies ties, RngStream* rng) {
    if (ties == CrowdingTies::member_index || rng == nullptr) return {};
    return random_tie_keys(members, arity, *rng);
}

void assign_crowding(RankedPopulation& pop, CrowdingTies ties, RngStream* rng) {
    pop.crowding.assign(pop.size(), 0.0);
    std::vector<ObjectiveVector> f;
    for (const auto& front : fronts_from_ranks(pop.rank)) {
        f.clear();
        for (const std::size_t i : front) f.push_back(pop.members[i].objectives);
        const auto keys = tie_keys_for(f.size(), f.front().size(), ties, rng);
        const auto c = crowding_assign(std::span<const ObjectiveVector>(f), keys);
        for (std::size_t t = 0; t < front.size(); ++t) pop.crowding[front[t]] = c[t];
    }
}

}  // namespace

RankedPopulation rank_population(std::vector<Individual> members, CrowdingTies ties, RngStream* rng) {
    RankedPopulation pop;
    pop.rank = non_dominated_sort(std::span<const Individual>(members));
    pop.members = std::move(members);
    assign_crowding(pop, ties, rng);
    return pop;
}

RankedPopulation survival_select(std::vector<Individual> combined, std::size_t n, RngStream& rng, CrowdingTies ties) {
    if (n > combined.size()) throw std::invalid_argument("survival_select: target exceeds pool size");
    const auto ranks = non_dominated_sort(std::span<const Individual>(combined));
    const auto fronts = fronts_from_ranks(ranks);

    std::vector<char> keep(combined.size(), 0);
    std::size_t kept = 0;
    std::size_t critical = fronts.size() + 1;
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        const auto& front = fronts[r];
        if (kept + front.size() <= n) {
            for (const std::size_t i : front) keep[i] = 1;
            kept += front.size();
            if (kept == n) {
                // i* is the next rank, from which nothing is taken.
                critical = r + 2;
                break;
            }
            continue;
        }
        critical = r + 1;
        std::vector<ObjectiveVector> f;
        f.reserve(front.size());
        for (const std::size_t i : front) f.push_back(combined[i].objectives);
        const auto keys = tie_keys_for(f.size(), f.front().size(), ties, &rng);
        const auto crowd = crowding_assign(std::span<const ObjectiveVector>(f), keys);

        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
        const std::size_t take = n - kept;
        const double cut = crowd[order[take - 1]];
        std::size_t group_begin = 0;
        while (crowd[order[group_begin]] > cut) ++group_begin;
        std::size_t group_end = group_begin;
        while (group_end < order.size() && crowd[order[group_end]] == cut) ++group_end;
        rng.shuffle(std::span<std::size_t>(order.data() + group_begin, group_end - group_begin));
        for (std::size_t t = 0; t < take; ++t) keep[front[order[t]]] = 1;
        kept = n;
        break;
    }

    RankedPopulation out;
    out.members.reserve(n);
    out.rank.reserve(n);
    for (std::size_t i = 0; i < combined.size(); ++i) {
        if (!keep[i]) continue;
        out.members.push_back(std::move(combined[i]));
        // Removing members of rank >= i* leaves every survivor's rank unchanged.
        out.rank.push_back(ranks[i]);
    }
    out.critical_rank = critical;
    assign_crowding(out, ties, &rng);
    return out;
}

std::size_t binary_tournament(const RankedPopulation& ranked, std::size_t a, std::size_t b, RngStream& rng) {
    if (ranked.rank[a] != ranked.rank[b]) return ranked.rank[a] < ranked.rank[b] ? a : b;
    if (ranked.crowding[a] != ranked.crowding[b]) return ranked.crowding[a] > ranked.crowding[b] ? a : b;
    return rng.bernoulli(0.5) ? a : b;
}

ParentPairs select_parent_pairs(const RankedPopulation& ranked, SelectionMethod method, RngStream& rng) {
    const std::size_t n = ranked.size();
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("select_parent_pairs: population size must be even");
    ParentPairs pairs;
    pairs.reserve(n / 2);
    switch (method) {
        case SelectionMethod::fair: {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            rng.shuffle(std::span<std::size_t>(perm));
            for (std::size_t i = 0; i < n; i += 2) pairs.emplace_back(perm[i], perm[i + 1]);
            break;
        }
        case SelectionMethod::uniform: {
            for (std::size_t i = 0; i < n / 2; ++i) {
                const std::size_t a = rng.below(n);
                const std::size_t b = rng.below(n);
                pairs.emplace_back(a, b);
            }
            break;
        }
        case SelectionMethod::n_tournaments: {
            std::vector<std::size_t> winners;
            winners.reserve(n);
            for (std::size_t t = 0; t < n; ++t) {
                const auto [a, b] = rng.distinct_pair(n);
                winners.push_back(binary_tournament(ranked, a, b, rng));
            }
            rng.shuffle(std::span<std::size_t>(winners));
            for (std::size_t i = 0; i < n; i += 2) pairs.emplace_back(winners[i], winners[i + 1]);
            break;
        }
        case SelectionMethod::two_permutation: {
            std::vector<std::size_t> leftovers;
            for (int j = 0; j < 2; ++j) {
                std::vector<std::size_t> perm(n);
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                rng.shuffle(std::span<std::size_t>(perm));
                std::vector<std::size_t> winners;
                winners.reserve(n / 2);
                for (std::size_t i = 0; i < n; i += 2) winners.push_back(binary_tournament(ranked, perm[i], perm[i + 1], rng));
                std::size_t i = 0;
                for (; i + 1 < winners.size(); i += 2) pairs.emplace_back(winners[i], winners[i + 1]);
                if (i < winners.size()) leftovers.push_back(winners[i]);
            }
            if (leftovers.size() == 2) pairs.emplace_back(leftovers[0], leftovers[1]);
            break;
        }
    }
    return pairs;
}

void Nsga2Config::validate() const {
    spec.validate();
    if (spec.kind != ProblemKind::ojzj) throw std::invalid_argument("Nsga2Config: NSGA-II runs on the ojzj problem");
    if (pop_size < 2 || pop_size % 2 != 0) {
        throw std::invalid_argument("Nsga2Config: population size must be even and at least 2, got " +
                                    std::to_string(pop_size));
    }
    if (!(pc >= 0.0 && pc <= 1.0)) throw std::invalid_argument("Nsga2Config: pc must be in [0, 1]");
    const double rate = effective_mutation_rate();
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("Nsga2Config: mutation rate must be in [0, 1]");
}

std::vector<std::pair<std::size_t, std::size_t>> positive_crowding_counts(const RankedPopulation& ranked) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& front : fronts_from_ranks(ranked.rank)) {
        std::size_t positive = 0;
        std::set<ObjectiveVector> distinct;
        for (const std::size_t i : front) {
            if (ranked.crowding[i] > 0.0) ++positive;
            distinct.insert(ranked.members[i].objectives);
        }
        out.emplace_back(positive, distinct.size());
    }
    return out;
}

namespace {

void check_step_invariants(const std::vector<Individual>& combined, const RankedPopulation& next, std::size_t n) {
    if (next.size() != n) throw std::logic_error("survival: output size differs from N");
    const auto ranks = non_dominated_sort(std::span<const Individual>(combined));
    // Every member of rank below i* must be present among the survivors.
    std::multiset<std::string> survivors;
    for (const auto& m : next.members) survivors.insert(m.genome.to_string());
    std::multiset<std::string> pool;
    for (const auto& m : combined) pool.insert(m.genome.to_string());
    for (const auto& s : survivors) {
        if (survivors.count(s) > pool.count(s)) throw std::logic_error("survival: output is not a sub-multiset of R_t");
    }
    std::multiset<std::string> required;
    for (std::size_t i = 0; i < combined.size(); ++i) {
        if (ranks[i] < next.critical_rank) required.insert(combined[i].genome.to_string());
    }
    for (const auto& s : required) {
        if (survivors.count(s) < required.count(s)) throw std::logic_error("survival: lost a member below i*");
    }
    const auto fresh = non_dominated_sort(std::span<const Individual>(next.members));
    if (fresh != next.rank) throw std::logic_error("survival: stale ranks");
    for (const auto& [positive, distinct] : positive_crowding_counts(next)) {
        if (positive > 4 * distinct) throw std::logic_error("crowding: more than 4 positive members per objective vector");
    }
}

}  // namespace

StepEvents nsga2_step(RankedPopulation& state, const Nsga2Config& config, RngStream& rng) {
    const std::size_t n = config.pop_size;
    if (state.size() != n) throw std::invalid_argument("nsga2_step: population size differs from N");
    const double rate = config.effective_mutation_rate();
    const auto pairs = select_parent_pairs(state, config.selection, rng);

    StepEvents events;
    std::vector<Individual> combined;
    combined.reserve(2 * n);
    for (const auto& m : state.members) combined.push_back(m);
    for (const auto& [a, b] : pairs) {
        Individual c1;
        Individual c2;
        if (rng.bernoulli(config.pc)) {
            auto children = uniform_crossover_two(state.members[a].genome, state.members[b].genome, rng);
            c1.genome = std::move(children.first);
            c2.genome = std::move(children.second);
            c1.origin = c2.origin = Origin::crossover;
            ++events.crossover_pairs;
        } else {
            c1.genome = state.members[a].genome;
            c2.genome = state.members[b].genome;
            c1.origin = c2.origin = Origin::mutation;
        }
        mutate_in_place(c1.genome, rate, rng);
        mutate_in_place(c2.genome, rate, rng);
        evaluate(config.spec, c1);
        evaluate(config.spec, c2);
        events.evaluations += 2;
        combined.push_back(std::move(c1));
        combined.push_back(std::move(c2));
    }

    if (config.check_invariants) {
        const auto snapshot = combined;
        state = survival_select(std::move(combined), n, rng, config.crowding_ties);
        check_step_invariants(snapshot, state, n);
    } else {
        state = survival_select(std::move(combined), n, rng, config.crowding_ties);
    }
    return events;
}

namespace {

std::optional<bool> extremal_origin(const RankedPopulation& pop, bool ones) {
    for (const auto& m : pop.members) {
        if (ones ? m.genome.all_ones() : m.genome.all_zeros()) return m.origin == Origin::crossover;
    }
    return std::nullopt;
}

}  // namespace

RunResult nsga2_run(const Nsga2Config& config, const Nsga2Observer& observer) {
    config.validate();
    RngStream rng(config.seed);
    RunResult result;
    result.seed = config.seed;

    std::vector<Individual> initial(config.pop_size);
    for (auto& ind : initial) {
        ind.genome = sample_uniform(config.spec.n, rng);
        evaluate(config.spec, ind);
    }
    result.evaluations = config.pop_size;
    RankedPopulation pop = rank_population(std::move(initial), config.crowding_ties, &rng);

    std::uint64_t iteration = 0;
    const auto record = [&](const FrontCoverage& cov) {
        if (cov.inner_covered && !result.inner_cover_iter) result.inner_cover_iter = iteration;
        if (cov.has_all_ones && !result.all_ones_by_crossover) result.all_ones_by_crossover = extremal_origin(pop, true);
        if (cov.has_all_zeros && !result.all_zeros_by_crossover) result.all_zeros_by_crossover = extremal_origin(pop, false);
        const int seen = static_cast<int>(result.all_ones_by_crossover.has_value()) +
                         static_cast<int>(result.all_zeros_by_crossover.has_value());
        if (seen >= 1 && !result.first_extremal_iter) result.first_extremal_iter = iteration;
        if (seen == 2 && !result.second_extremal_iter) result.second_extremal_iter = iteration;
        if (observer) observer(iteration, pop, cov);
    };

    FrontCoverage cov = classify_coverage(pop.members, config.spec);
    record(cov);
    while (!cov.full(config.spec) && result.evaluations < config.max_evals) {
        const auto events = nsga2_step(pop, config, rng);
        result.evaluations += events.evaluations;
        ++iteration;
        cov = classify_coverage(pop.members, config.spec);
        record(cov);
    }
    result.iterations = iteration;
    result.success = cov.full(config.spec);
    return result;
}

}  // namespace xover
