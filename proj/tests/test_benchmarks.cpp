#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "xover/benchmarks.hpp"

using namespace xover;

namespace {

BitString with_ones(std::size_t n, std::size_t ones) {
    BitString x(n);
    for (std::size_t i = 0; i < ones; ++i) x.set(i, true);
    return x;
}

Individual individual(const ProblemSpec& spec, BitString x) {
    Individual ind{std::move(x), {}, false, Origin::initial};
    evaluate(spec, ind);
    return ind;
}

BitString from_bits(std::size_t n, std::uint64_t bits) {
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, (bits >> i) & 1u);
    return x;
}

}  // namespace

TEST_CASE("jump values") {
    CHECK(jump_value(with_ones(10, 8), 2) == 10);
    CHECK(jump_value(BitString::ones(10), 2) == 12);
    CHECK(jump_value(with_ones(10, 9), 2) == 1);
}

TEST_CASE("ojzj values") {
    CHECK(ojzj_value(with_ones(10, 5), 2) == ObjectiveVector{7, 7});
    CHECK(ojzj_value(BitString::zeros(10), 2) == ObjectiveVector{2, 12});
    CHECK(ojzj_value(with_ones(10, 9), 2) == ObjectiveVector{1, 3});
    CHECK(ojzj_value(with_ones(10, 1), 2) == ObjectiveVector{3, 1});
    CHECK(ojzj_value(BitString::ones(10), 2) == ObjectiveVector{12, 2});
}

TEST_CASE("inner set objectives sum to n + 2k") {
    for (std::size_t n = 8; n <= 40; ++n) {
        for (std::size_t k = 2; k <= n / 4; ++k) {
            for (std::size_t ones = k; ones <= n - k; ++ones) {
                REQUIRE(ojzj_value(with_ones(n, ones), k).sum() == static_cast<std::int64_t>(n + 2 * k));
            }
        }
    }
}

TEST_CASE("jump maximum is unique at the all-ones string") {
    for (std::size_t n = 8; n <= 12; ++n) {
        for (std::size_t k = 2; k <= n / 4; ++k) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                const auto x = from_bits(n, bits);
                const auto f = jump_value(x, k);
                if (x.all_ones()) {
                    REQUIRE(f == static_cast<std::int64_t>(n + k));
                } else {
                    REQUIRE(f < static_cast<std::int64_t>(n + k));
                }
            }
        }
    }
}

TEST_CASE("problem spec range") {
    CHECK_NOTHROW(ProblemSpec{ProblemKind::ojzj, 8, 2}.validate());
    CHECK_NOTHROW(ProblemSpec{ProblemKind::ojzj, 11, 2}.validate());
    CHECK_THROWS_AS(ProblemSpec({ProblemKind::ojzj, 11, 3}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ProblemSpec({ProblemKind::jump, 20, 1}).validate(), std::invalid_argument);
}

TEST_CASE("pareto front") {
    CHECK(pareto_front(50, 2).size() == 49);
    const auto f = pareto_front(10, 2);
    CHECK(std::find(f.begin(), f.end(), ObjectiveVector{2, 12}) != f.end());
    CHECK(std::find(f.begin(), f.end(), ObjectiveVector{12, 2}) != f.end());
    CHECK(on_pareto_front({12, 2}, 10, 2));
    CHECK_FALSE(on_inner_front({12, 2}, 10, 2));
    CHECK(on_inner_front({7, 7}, 10, 2));
    CHECK_FALSE(on_pareto_front({1, 1}, 10, 2));
    CHECK_FALSE(on_pareto_front({3, 11}, 10, 2));
}

TEST_CASE("pareto front equals the non-dominated image for n <= 12") {
    for (std::size_t n = 8; n <= 12; ++n) {
        for (std::size_t k = 2; k <= n / 4; ++k) {
            std::set<ObjectiveVector> image;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
                image.insert(ojzj_value(from_bits(n, bits), k));
            }
            std::vector<ObjectiveVector> nd;
            for (const auto& a : image) {
                const bool dominated =
                    std::any_of(image.begin(), image.end(), [&](const auto& b) { return dominates(b, a); });
                if (!dominated) nd.push_back(a);
            }
            std::sort(nd.begin(), nd.end());
            REQUIRE(nd == pareto_front(n, k));
            for (const auto& v : nd) REQUIRE(on_pareto_front(v, n, k));
        }
    }
}

TEST_CASE("classify coverage") {
    SUBCASE("inner front without extremal points") {
        const ProblemSpec spec{ProblemKind::ojzj, 12, 3};
        std::vector<Individual> pop;
        for (std::size_t ones = spec.k; ones <= spec.n - spec.k; ++ones) pop.push_back(individual(spec, with_ones(12, ones)));
        pop.push_back(individual(spec, with_ones(12, 11)));  // valley
        const auto cov = classify_coverage(pop, spec);
        CHECK(cov.inner_covered);
        CHECK(cov.extremal_found() == ExtremalFound::none);
        CHECK(cov.covered.size() == spec.front_size() - 2);
    }
    SUBCASE("empty population") {
        const ProblemSpec spec{ProblemKind::ojzj, 12, 3};
        const auto cov = classify_coverage({}, spec);
        CHECK(cov.covered.empty());
        CHECK_FALSE(cov.inner_covered);
    }
    SUBCASE("all strings of length 8") {
        const ProblemSpec spec{ProblemKind::ojzj, 8, 2};
        std::vector<Individual> pop;
        for (std::uint64_t bits = 0; bits < 256; ++bits) pop.push_back(individual(spec, from_bits(8, bits)));
        const auto cov = classify_coverage(pop, spec);
        CHECK(cov.covered.size() == 7);
        CHECK(cov.full(spec));
        CHECK(cov.extremal_found() == ExtremalFound::both);
    }
    SUBCASE("one extremal point") {
        const ProblemSpec spec{ProblemKind::ojzj, 8, 2};
        const std::vector<Individual> pop{individual(spec, BitString::ones(8))};
        const auto cov = classify_coverage(pop, spec);
        CHECK(cov.has_all_ones);
        CHECK_FALSE(cov.has_all_zeros);
        CHECK(cov.extremal_found() == ExtremalFound::one);
    }
}
