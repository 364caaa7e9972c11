#include "xover/diversity.hpp"

#include <algorithm>

namespace xover {

std::uint64_t probe_interval(std::size_t n, std::size_t k) noexcept {
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) power *= n;
    return std::max<std::uint64_t>(1, power / 50);
}

double half_max_hamming(std::span<const BitString* const> group) {
    std::size_t best = 0;
    for (std::size_t a = 0; a < group.size(); ++a) {
        for (std::size_t b = a + 1; b < group.size(); ++b) best = std::max(best, hamming(*group[a], *group[b]));
    }
    return static_cast<double>(best) / 2.0;
}

std::vector<DiversityRecord> diversity_probe(std::uint64_t iteration, std::span<const Individual> population,
                                             const ProblemSpec& spec, const FrontCoverage& coverage,
                                             bool extremal_seen) {
    std::vector<const BitString*> low;
    std::vector<const BitString*> high;
    for (const auto& ind : population) {
        const std::size_t ones = ind.genome.count_ones();
        if (ones == spec.k) low.push_back(&ind.genome);
        if (ones == spec.n - spec.k) high.push_back(&ind.genome);
    }
    const bool in_window =
        coverage.inner_covered && coverage.extremal_found() == ExtremalFound::none && !extremal_seen;
    return {
        {iteration, DiversityGroup::k_ones, half_max_hamming(low), in_window},
        {iteration, DiversityGroup::n_minus_k_ones, half_max_hamming(high), in_window},
    };
}

std::optional<double> windowed_mean(std::span<const DiversityRecord> trace) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : trace) {
        if (!r.in_window) continue;
        sum += r.value;
        ++count;
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

}  // namespace xover
