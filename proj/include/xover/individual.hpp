#pragma once

/// @file individual.hpp
/// @brief Objective vectors, Pareto dominance and the Individual container.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "xover/bitstring.hpp"

namespace xover {

/// One or two exact integer objective values (maximization).
class ObjectiveVector {
public:
    static constexpr std::size_t max_arity = 2;

    ObjectiveVector() = default;
    ObjectiveVector(std::initializer_list<std::int64_t> values);

    [[nodiscard]] std::size_t size() const noexcept { return arity_; }
    [[nodiscard]] std::int64_t operator[](std::size_t j) const noexcept { return values_[j]; }
    [[nodiscard]] std::int64_t sum() const noexcept { return values_[0] + values_[1]; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;

private:
    std::array<std::int64_t, max_arity> values_{};
    std::size_t arity_ = 0;
};

/// a >= b componentwise and a != b. Throws std::invalid_argument when the
/// arities differ.
[[nodiscard]] bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// How an individual's genome was last produced.
enum class Origin : std::uint8_t { initial, mutation, crossover };

struct Individual {
    BitString genome;
    ObjectiveVector objectives;
    bool evaluated = false;
    Origin origin = Origin::initial;
};

}  // namespace xover
