#pragma once

/// @file benchmarks.hpp
/// @brief Jump and OneJumpZeroJump with their Pareto front and coverage helpers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xover/individual.hpp"

namespace xover {

enum class ProblemKind { jump, ojzj };

[[nodiscard]] std::string_view to_string(ProblemKind kind) noexcept;

struct ProblemSpec {
    ProblemKind kind = ProblemKind::ojzj;
    std::size_t n = 0;
    std::size_t k = 0;

    /// Throws std::invalid_argument unless 2 <= k <= floor(n/4).
    void validate() const;
    [[nodiscard]] std::size_t arity() const noexcept { return kind == ProblemKind::jump ? 1 : 2; }
    /// n - 2k + 3 for ojzj.
    [[nodiscard]] std::size_t front_size() const noexcept { return n - 2 * k + 3; }

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Jump value from the number of one-bits; the formula only depends on |x|_1.
[[nodiscard]] constexpr std::int64_t jump_from_ones(std::size_t ones, std::size_t n, std::size_t k) noexcept {
    const auto o = static_cast<std::int64_t>(ones);
    const auto len = static_cast<std::int64_t>(n);
    if (ones + k <= n || ones == n) return static_cast<std::int64_t>(k) + o;
    return len - o;
}

[[nodiscard]] std::int64_t jump_value(const BitString& x, std::size_t k);
[[nodiscard]] ObjectiveVector ojzj_value(const BitString& x, std::size_t k);

/// Objective vector of x under spec: (jump) for jump, (f1, f2) for ojzj.
[[nodiscard]] ObjectiveVector evaluate(const ProblemSpec& spec, const BitString& x);

/// Fills objectives and marks the individual evaluated.
void evaluate(const ProblemSpec& spec, Individual& ind);

/// {(a, 2k+n-a) : a in [2k..n] or a in {k, n+k}}, sorted by ascending a.
[[nodiscard]] std::vector<ObjectiveVector> pareto_front(std::size_t n, std::size_t k);

/// True iff v lies on the OneJumpZeroJump front of (n, k).
[[nodiscard]] bool on_pareto_front(const ObjectiveVector& v, std::size_t n, std::size_t k) noexcept;
/// True iff v lies on the inner part of the front (|x|_1 in [k..n-k]).
[[nodiscard]] bool on_inner_front(const ObjectiveVector& v, std::size_t n, std::size_t k) noexcept;

enum class ExtremalFound { none, one, both };

struct FrontCoverage {
    /// Front points present in the population, ascending by first objective.
    std::vector<ObjectiveVector> covered;
    bool inner_covered = false;
    bool has_all_ones = false;   // (n+k, k)
    bool has_all_zeros = false;  // (k, n+k)

    [[nodiscard]] ExtremalFound extremal_found() const noexcept;
    [[nodiscard]] bool full(const ProblemSpec& spec) const noexcept { return covered.size() == spec.front_size(); }
};

/// Intersects the population's objective vectors with the front. Individuals
/// must be evaluated under spec (kind ojzj).
[[nodiscard]] FrontCoverage classify_coverage(std::span<const Individual> population, const ProblemSpec& spec);

}  // namespace xover
