#include "xover/benchmarks.hpp"

#include <stdexcept>

namespace xover {

std::string_view to_string(ProblemKind kind) noexcept {
    return kind == ProblemKind::jump ? "jump" : "ojzj";
}

void ProblemSpec::validate() const {
    if (k < 2 || k > n / 4) {
        throw std::invalid_argument("ProblemSpec: need 2 <= k <= floor(n/4), got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    }
}

std::int64_t jump_value(const BitString& x, std::size_t k) {
    return jump_from_ones(x.count_ones(), x.size(), k);
}

ObjectiveVector ojzj_value(const BitString& x, std::size_t k) {
    const std::size_t ones = x.count_ones();
    const std::size_t n = x.size();
    return {jump_from_ones(ones, n, k), jump_from_ones(n - ones, n, k)};
}

ObjectiveVector evaluate(const ProblemSpec& spec, const BitString& x) {
    if (x.size() != spec.n) throw std::invalid_argument("evaluate: genome length does not match problem");
    if (spec.kind == ProblemKind::jump) return {jump_value(x, spec.k)};
    return ojzj_value(x, spec.k);
}

void evaluate(const ProblemSpec& spec, Individual& ind) {
    ind.objectives = evaluate(spec, ind.genome);
    ind.evaluated = true;
}

std::vector<ObjectiveVector> pareto_front(std::size_t n, std::size_t k) {
    const auto total = static_cast<std::int64_t>(n + 2 * k);
    std::vector<ObjectiveVector> front;
    front.reserve(n - 2 * k + 3);
    const auto push = [&](std::int64_t a) { front.push_back({a, total - a}); };
    push(static_cast<std::int64_t>(k));
    for (auto a = static_cast<std::int64_t>(2 * k); a <= static_cast<std::int64_t>(n); ++a) push(a);
    push(static_cast<std::int64_t>(n + k));
    return front;
}

bool on_inner_front(const ObjectiveVector& v, std::size_t n, std::size_t k) noexcept {
    if (v.size() != 2) return false;
    const auto a = v[0];
    return v.sum() == static_cast<std::int64_t>(n + 2 * k) && a >= static_cast<std::int64_t>(2 * k) &&
           a <= static_cast<std::int64_t>(n);
}

bool on_pareto_front(const ObjectiveVector& v, std::size_t n, std::size_t k) noexcept {
    if (v.size() != 2 || v.sum() != static_cast<std::int64_t>(n + 2 * k)) return false;
    const auto a = v[0];
    return on_inner_front(v, n, k) || a == static_cast<std::int64_t>(k) || a == static_cast<std::int64_t>(n + k);
}

ExtremalFound FrontCoverage::extremal_found() const noexcept {
    const int found = static_cast<int>(has_all_ones) + static_cast<int>(has_all_zeros);
    return found == 0 ? ExtremalFound::none : found == 1 ? ExtremalFound::one : ExtremalFound::both;
}

FrontCoverage classify_coverage(std::span<const Individual> population, const ProblemSpec& spec) {
    const std::size_t n = spec.n;
    const std::size_t k = spec.k;
    // Index by first objective; front points are identified by it.
    std::vector<char> seen(n + k + 1, 0);
    for (const auto& ind : population) {
        if (on_pareto_front(ind.objectives, n, k)) seen[static_cast<std::size_t>(ind.objectives[0])] = 1;
    }
    FrontCoverage cov;
    bool inner = true;
    for (const auto& v : pareto_front(n, k)) {
        const bool present = seen[static_cast<std::size_t>(v[0])] != 0;
        if (present) cov.covered.push_back(v);
        if (on_inner_front(v, n, k) && !present) inner = false;
    }
    cov.inner_covered = inner;
    cov.has_all_zeros = seen[k] != 0;
    cov.has_all_ones = seen[n + k] != 0;
    return cov;
}

}  // namespace xover
