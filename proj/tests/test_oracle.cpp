#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "xover/oracle.hpp"

using namespace xover;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("brute rank") {
    CHECK(oracle::brute_rank(std::vector<ObjectiveVector>{{1, 3}, {2, 2}, {3, 1}, {1, 1}}) ==
          std::vector<std::size_t>{1, 1, 1, 2});
    CHECK(oracle::brute_rank(std::vector<ObjectiveVector>{{4, 4}}) == std::vector<std::size_t>{1});
    CHECK(oracle::brute_rank(std::vector<ObjectiveVector>{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}) ==
          std::vector<std::size_t>{5, 4, 3, 2, 1});
}

TEST_CASE("brute crowding") {
    CHECK(oracle::brute_crowding(std::vector<ObjectiveVector>{{1, 4}, {2, 3}, {4, 1}}) ==
          std::vector<double>{inf, 2.0, inf});
    CHECK(oracle::brute_crowding(std::vector<ObjectiveVector>{{1, 4}, {4, 1}}) == std::vector<double>{inf, inf});
    const auto c = oracle::brute_crowding(std::vector<ObjectiveVector>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK(c[0] == inf);
    CHECK(c[3] == inf);
    CHECK(c[1] == doctest::Approx(4.0 / 3.0));
    CHECK(c[2] == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("brute crowding follows per-objective tie keys") {
    // Three copies of one point: the first and last of each objective's order are infinite.
    const std::vector<ObjectiveVector> f{{2, 2}, {2, 2}, {2, 2}};
    CHECK(oracle::brute_crowding(f) == std::vector<double>{inf, 0.0, inf});
    const std::vector<std::vector<std::size_t>> keys{{1, 0, 2}, {0, 2, 1}};
    // objective 0 order: 1, 0, 2 -> members 1 and 2 infinite; objective 1 order: 0, 2, 1 -> 0 and 1.
    CHECK(oracle::brute_crowding(f, keys) == std::vector<double>{inf, inf, inf});
    const std::vector<std::vector<std::size_t>> same{{2, 0, 1}, {2, 0, 1}};
    CHECK(oracle::brute_crowding(f, same) == std::vector<double>{inf, inf, 0.0});
}

TEST_CASE("brute front") {
    CHECK(oracle::brute_front({ProblemKind::ojzj, 8, 2}) == pareto_front(8, 2));
    CHECK(oracle::brute_front({ProblemKind::ojzj, 8, 2}).size() == 7);
    CHECK(oracle::brute_front({ProblemKind::ojzj, 10, 2}).size() == 9);
    CHECK(oracle::brute_front({ProblemKind::ojzj, 12, 3}).size() == 9);
    CHECK_THROWS_AS((void)oracle::brute_front({ProblemKind::ojzj, 17, 2}), std::invalid_argument);
}

TEST_CASE("oracle suites pass") {
    const auto sorting = oracle::verify_sorting(1000, 8, 1);
    CHECK(sorting.cases_run == 1000);
    CHECK(sorting.passed());
    const auto fronts = oracle::verify_fronts(8, 14);
    CHECK(fronts.cases_run > 0);
    CHECK(fronts.passed());
}
