#include "xover/oracle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xover/nsga2.hpp"
#include "xover/rng.hpp"

namespace xover::oracle {

void OracleReport::merge(const OracleReport& other) {
    cases_run += other.cases_run;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

std::vector<std::size_t> brute_rank(std::span<const ObjectiveVector> objectives) {
    const std::size_t m = objectives.size();
    std::vector<std::size_t> rank(m, 0);
    std::size_t assigned = 0;
    for (std::size_t r = 1; assigned < m; ++r) {
        std::vector<std::size_t> layer;
        for (std::size_t p = 0; p < m; ++p) {
            if (rank[p] != 0) continue;
            bool dominated = false;
            for (std::size_t q = 0; q < m && !dominated; ++q) {
                if (rank[q] == 0 && dominates(objectives[q], objectives[p])) dominated = true;
            }
            if (!dominated) layer.push_back(p);
        }
        for (const std::size_t p : layer) rank[p] = r;
        assigned += layer.size();
    }
    return rank;
}

std::vector<double> brute_crowding(std::span<const ObjectiveVector> front,
                                   const std::vector<std::vector<std::size_t>>& tie_keys) {
    const std::size_t m = front.size();
    std::vector<double> total(m, 0.0);
    if (m == 0) return total;
    const std::size_t arity = front[0].size();
    for (std::size_t j = 0; j < arity; ++j) {
        const auto key = [&](std::size_t i) { return tie_keys.empty() ? i : tie_keys[j][i]; };
        const auto before = [&](std::size_t a, std::size_t b) {
            return front[a][j] < front[b][j] || (front[a][j] == front[b][j] && key(a) < key(b));
        };
        // Position of every member in the sorted list, by counting predecessors.
        std::vector<std::size_t> at(m);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t pos = 0;
            for (std::size_t q = 0; q < m; ++q) {
                if (before(q, i)) ++pos;
            }
            at[pos] = i;
        }
        const std::int64_t min_value = front[at[0]][j];
        const std::int64_t max_value = front[at[m - 1]][j];
        for (std::size_t pos = 0; pos < m; ++pos) {
            const std::size_t i = at[pos];
            if (pos == 0 || pos == m - 1) {
                total[i] = std::numeric_limits<double>::infinity();
                continue;
            }
            if (max_value == min_value) continue;
            const std::int64_t left = front[at[pos - 1]][j];
            const std::int64_t right = front[at[pos + 1]][j];
            total[i] += static_cast<double>(right - left) / static_cast<double>(max_value - min_value);
        }
    }
    return total;
}

std::vector<ObjectiveVector> brute_front(const ProblemSpec& spec) {
    if (spec.n > 16) throw std::invalid_argument("brute_front: n > 16 is too large to enumerate");
    std::vector<ObjectiveVector> image;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << spec.n); ++bits) {
        BitString x(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) x.set(i, (bits >> i) & 1u);
        image.push_back(ojzj_value(x, spec.k));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<ObjectiveVector> front;
    for (const auto& v : image) {
        const bool dominated =
            std::any_of(image.begin(), image.end(), [&](const ObjectiveVector& w) { return dominates(w, v); });
        if (!dominated) front.push_back(v);
    }
    return front;
}

namespace {

std::string describe(std::span<const ObjectiveVector> f) {
    std::ostringstream os;
    for (const auto& v : f) os << v.to_string();
    return os.str();
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
    return os.str();
}

bool same_crowding(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::isinf(a[i]) || std::isinf(b[i])) {
            if (a[i] != b[i]) return false;
        } else if (std::abs(a[i] - b[i]) > 1e-12) {
            return false;
        }
    }
    return true;
}

}  // namespace

OracleReport verify_sorting(std::size_t cases, std::size_t max_n, std::uint64_t seed) {
    if (max_n < 1) throw std::invalid_argument("verify_sorting: max_n must be positive");
    OracleReport report;
    RngStream rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
        RngStream local = rng.derive(c);
        const std::size_t size = 1 + local.below(24);
        std::vector<ObjectiveVector> f;
        f.reserve(size);
        if (c % 2 == 0 && max_n >= 8) {
            // Evaluated OneJumpZeroJump genomes: many exact ties.
            const std::size_t n = 8 + local.below(max_n - 7);
            for (std::size_t i = 0; i < size; ++i) f.push_back(ojzj_value(sample_uniform(n, local), 2));
        } else {
            // Small-range integer vectors: arbitrary front shapes.
            const std::size_t range = 1 + local.below(std::max<std::size_t>(max_n, 2));
            for (std::size_t i = 0; i < size; ++i) {
                f.push_back({static_cast<std::int64_t>(local.below(range + 1)),
                             static_cast<std::int64_t>(local.below(range + 1))});
            }
        }
        ++report.cases_run;
        const auto fast = non_dominated_sort(std::span<const ObjectiveVector>(f));
        const auto slow = brute_rank(f);
        if (fast != slow) {
            report.mismatches.push_back({"ranks " + describe(f), join(slow), join(fast)});
            continue;
        }
        for (const auto& front : fronts_from_ranks(slow)) {
            std::vector<ObjectiveVector> members;
            for (const std::size_t i : front) members.push_back(f[i]);
            const auto expected = brute_crowding(members);
            const auto actual = crowding_assign(std::span<const ObjectiveVector>(members));
            if (!same_crowding(expected, actual)) {
                report.mismatches.push_back({"crowding " + describe(members), join(expected), join(actual)});
            }
            std::vector<std::vector<std::size_t>> keys(2, std::vector<std::size_t>(members.size()));
            for (auto& key : keys) {
                for (std::size_t i = 0; i < key.size(); ++i) key[i] = i;
                local.shuffle(std::span<std::size_t>(key));
            }
            const auto expected_keyed = brute_crowding(members, keys);
            const auto actual_keyed = crowding_assign(std::span<const ObjectiveVector>(members), keys);
            if (!same_crowding(expected_keyed, actual_keyed)) {
                report.mismatches.push_back(
                    {"keyed crowding " + describe(members), join(expected_keyed), join(actual_keyed)});
            }
        }
    }
    return report;
}

OracleReport verify_fronts(std::size_t min_n, std::size_t max_n) {
    OracleReport report;
    for (std::size_t n = min_n; n <= max_n; ++n) {
        for (std::size_t k = 2; k <= n / 4; ++k) {
            ++report.cases_run;
            const auto expected = brute_front({ProblemKind::ojzj, n, k});
            const auto actual = pareto_front(n, k);
            if (expected != actual) {
                report.mismatches.push_back(
                    {"front n=" + std::to_string(n) + " k=" + std::to_string(k), describe(expected), describe(actual)});
            }
        }
    }
    return report;
}

}  // namespace xover::oracle
