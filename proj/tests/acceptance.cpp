// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   acceptance --cli <path to xover> --group fast|long|all --work-dir <dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xover/benchmarks.hpp"
#include "xover/ga.hpp"
#include "xover/harness.hpp"
#include "xover/nsga2.hpp"
#include "xover/report.hpp"
#include "xover/variation.hpp"

using namespace xover;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << detail << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v, int precision = 0) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

/// max(measured/expected, expected/measured).
double fold(double measured, double expected) { return std::max(measured / expected, expected / measured); }

int shell(const std::string& command) {
    const int status = std::system(command.c_str());
    return status;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

struct SummaryRow {
    std::size_t pop_size = 0;
    std::size_t mu = 0;
    double pc = 0.0;
    double mean = NAN;
    double diversity = NAN;
    std::size_t successes = 0;
    std::size_t reps = 0;
};

std::vector<SummaryRow> read_summary(const fs::path& path) {
    const auto rows = read_csv(path);
    std::vector<SummaryRow> out;
    if (rows.empty()) return out;
    const auto& h = rows[0];
    const auto col = [&](const std::string& name) {
        return static_cast<std::size_t>(std::find(h.begin(), h.end(), name) - h.begin());
    };
    const auto number = [](const std::string& s) { return s.empty() ? NAN : std::stod(s); };
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        SummaryRow s;
        s.pop_size = r[col("pop_size")].empty() ? 0 : std::stoul(r[col("pop_size")]);
        s.mu = r[col("mu")].empty() ? 0 : std::stoul(r[col("mu")]);
        s.pc = std::stod(r[col("pc")]);
        s.mean = number(r[col("mean_evaluations")]);
        s.diversity = number(r[col("diversity_mean")]);
        s.successes = std::stoul(r[col("successes")]);
        s.reps = std::stoul(r[col("reps")]);
        out.push_back(s);
    }
    return out;
}

std::vector<SummaryRow> rows_of(const ExperimentResult& result) {
    std::vector<SummaryRow> out;
    for (const auto& cr : result.cells) {
        SummaryRow s;
        s.pop_size = cr.cell.pop_size;
        s.mu = cr.cell.pop_size;
        s.pc = cr.cell.pc;
        s.mean = cr.summary.mean_evaluations.value_or(NAN);
        s.diversity = cr.summary.diversity_mean.value_or(NAN);
        s.successes = cr.summary.successes;
        s.reps = cr.summary.reps;
        out.push_back(s);
    }
    return out;
}

const SummaryRow* find_cell(const std::vector<SummaryRow>& rows, std::size_t size, double pc) {
    for (const auto& r : rows) {
        if ((r.pop_size == size || r.mu == size) && r.pc == pc) return &r;
    }
    return nullptr;
}

struct PaperCell {
    std::size_t size;
    double pc;
    double mean;
};

/// Checks each cell mean against the paper within `factor` and returns a detail string.
bool within_factor(const std::vector<SummaryRow>& rows, const std::vector<PaperCell>& paper, double factor,
                   std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& p : paper) {
        const auto* r = find_cell(rows, p.size, p.pc);
        const bool complete = r != nullptr && r->successes == r->reps && !std::isnan(r->mean);
        const double f = complete ? fold(r->mean, p.mean) : INFINITY;
        const bool cell_ok = complete && f <= factor;
        ok = ok && cell_ok;
        os << (os.tellp() > 0 ? "; " : "") << p.size << "/pc=" << fmt(p.pc, 1) << " "
           << (r ? fmt(r->mean) : std::string("missing")) << " vs " << fmt(p.mean) << " (x" << fmt(f, 2)
           << (cell_ok ? "" : " !") << ")";
        if (r != nullptr && r->successes != r->reps) os << " [" << r->successes << "/" << r->reps << " successful]";
    }
    detail = os.str();
    return ok;
}

// ---------------------------------------------------------------------------

void criterion_verify(const fs::path& cli, const fs::path& work) {
    const auto start = std::chrono::steady_clock::now();
    const auto log = work / "verify.txt";
    const int status = shell(quoted(cli) + " verify > " + quoted(log) + " 2>&1");
    const double took = seconds_since(start);
    const auto text = slurp(log);
    const bool ok = status == 0 && took < 60.0 && text.find("[FAIL]") == std::string::npos &&
                    text.find("0 mismatches") != std::string::npos;
    std::size_t passes = 0;
    for (auto pos = text.find("[PASS]"); pos != std::string::npos; pos = text.find("[PASS]", pos + 1)) ++passes;
    report(1, "oracle equivalence (verify)", ok,
           std::to_string(passes) + " suites passed, exit " + std::to_string(status) + ", " + fmt(took, 2) + " s");
}

void criterion_front_size() {
    std::size_t cases = 0;
    std::size_t bad = 0;
    for (std::size_t n = 8; n <= 200; ++n) {
        for (std::size_t k = 2; k <= n / 4; ++k) {
            ++cases;
            if (pareto_front(n, k).size() != n - 2 * k + 3) ++bad;
        }
    }
    report(2, "front size n-2k+3, n in [8..200]", bad == 0,
           std::to_string(cases) + " (n, k) pairs, " + std::to_string(bad) + " wrong");
}

void criterion_never_lose() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t runs = 0;
    std::size_t violations = 0;
    std::size_t failed = 0;
    std::uint64_t iterations = 0;
    for (const double pc : {0.0, 0.9}) {
        for (std::uint64_t rep = 0; rep < 10; ++rep) {
            Nsga2Config cfg;
            cfg.spec = {ProblemKind::ojzj, 30, 2};
            cfg.pop_size = Nsga2Config::pop_size_for_factor(4, cfg.spec);
            cfg.pc = pc;
            cfg.max_evals = default_max_evals(Algorithm::nsga2, 30, 2, cfg.pop_size);
            cfg.seed = derive_seed(3030, rep + (pc > 0 ? 100 : 0));
            cfg.check_invariants = true;
            std::set<ObjectiveVector> previous;
            const auto r = nsga2_run(cfg, [&](std::uint64_t, const RankedPopulation&, const FrontCoverage& cov) {
                const std::set<ObjectiveVector> now(cov.covered.begin(), cov.covered.end());
                if (!std::includes(now.begin(), now.end(), previous.begin(), previous.end())) ++violations;
                previous = now;
            });
            ++runs;
            iterations += r.iterations;
            if (!r.success) ++failed;
        }
    }
    report(3, "never-lose at n=30, k=2, N=100", violations == 0 && failed == 0,
           std::to_string(runs) + " runs, " + std::to_string(iterations) + " iterations checked, " +
               std::to_string(violations) + " losses, " + std::to_string(failed) + " unfinished, " +
               fmt(seconds_since(start), 1) + " s");
}

void criteria_table1(const fs::path& cli, const fs::path& work) {
    const auto a = work / "tables_a";
    const auto b = work / "tables_b";
    fs::remove_all(a);
    fs::remove_all(b);
    const auto start = std::chrono::steady_clock::now();
    const int sa = shell(quoted(cli) + " tables --which 1 --seed 42 --out-dir " + quoted(a) + " > " +
                         quoted(work / "tables_a.txt") + " 2>&1");
    const double took = seconds_since(start);
    const int sb = shell(quoted(cli) + " tables --which 1 --seed 42 --out-dir " + quoted(b) + " > " +
                         quoted(work / "tables_b.txt") + " 2>&1");

    const auto summary_path = a / "table1_summary.csv";
    if (sa != 0 || !fs::exists(summary_path)) {
        report(4, "table 1 means", false, "tables run failed, see " + (work / "tables_a.txt").string());
        report(6, "boundary diversity", false, "tables run failed");
    } else {
        const auto rows = read_summary(summary_path);
        std::string detail;
        bool ok = within_factor(rows,
                                {{98, 0.0, 247617}, {98, 0.9, 190577}, {196, 0.0, 416284}, {196, 0.9, 147921}},
                                2.5, detail);
        const auto* m = find_cell(rows, 196, 0.0);
        const auto* x = find_cell(rows, 196, 0.9);
        const bool order = m && x && x->mean < m->mean;
        report(4, "table 1 means within x2.5, crossover faster at N=196", ok && order,
               detail + "; ordering " + (order ? "holds" : "violated") + "; " + fmt(took, 0) + " s");

        const auto* d2 = find_cell(rows, 98, 0.9);
        const auto* d4 = find_cell(rows, 196, 0.9);
        const bool have = d2 && d4 && !std::isnan(d2->diversity) && !std::isnan(d4->diversity);
        const bool in_range = have && d2->diversity >= 0.1 && d2->diversity <= 2.0 && d4->diversity >= 0.1 &&
                              d4->diversity <= 2.0;
        const bool larger = have && d4->diversity > d2->diversity;
        report(6, "boundary diversity grows with N, both in [0.1, 2.0]", in_range && larger,
               have ? "N=98 " + fmt(d2->diversity, 3) + ", N=196 " + fmt(d4->diversity, 3) +
                          " (reference 0.76 and 0.99)"
                    : std::string("no windowed diversity recorded"));
    }

    bool identical = sa == 0 && sb == 0;
    std::string detail;
    for (const char* name : {"table1_runs.csv", "table1_summary.csv"}) {
        const bool same = fs::exists(a / name) && slurp(a / name) == slurp(b / name);
        identical = identical && same;
        detail += std::string(detail.empty() ? "" : ", ") + name + (same ? " identical" : " differs");
    }
    report(9, "tables --which 1 --seed 42 twice gives identical CSVs", identical, detail);
}

void criterion_table2() {
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_experiment(preset_config(TablePreset::table2, 42));
    const auto rows = rows_of(result);
    std::string detail;
    const bool ok = within_factor(
        rows, {{198, 0.0, 2411383}, {198, 0.9, 1954681}, {396, 0.0, 3858084}, {396, 0.9, 1322046}}, 2.5, detail);
    const auto* m = find_cell(rows, 396, 0.0);
    const auto* x = find_cell(rows, 396, 0.9);
    const bool order = m && x && x->mean < m->mean;
    report(5, "table 2 means within x2.5, crossover faster at N=396", ok && order,
           detail + "; ordering " + (order ? "holds" : "violated") + "; " + fmt(seconds_since(start), 0) + " s");
}

void criterion_ga_long() {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = preset_config(TablePreset::fig1, 42);
    cfg.mus = {2, 4};
    const auto rows = rows_of(run_experiment(cfg));
    std::string detail;
    const bool ok = within_factor(rows, {{2, 0.9, 1.7e7}, {4, 0.9, 6.3e6}}, 3.0, detail);
    bool below = true;
    for (const auto& r : rows) below = below && r.mean < 1e8;
    report(7, "(mu+1) GA at n=100, k=4 within x3, both below 1e8", ok && below,
           detail + "; " + fmt(seconds_since(start), 0) + " s");
}

void criterion_ga_proxy() {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg;
    cfg.algorithm = Algorithm::ga;
    cfg.n = 50;
    cfg.k = 3;
    cfg.mus = {2};
    cfg.pcs = {0.0, 0.9};
    cfg.reps = 10;
    cfg.base_seed = 42;
    const auto rows = rows_of(run_experiment(cfg));
    const auto* m = find_cell(rows, 2, 0.0);
    const auto* x = find_cell(rows, 2, 0.9);
    const bool ok = m && x && m->successes == m->reps && x->successes == x->reps && x->mean < m->mean;
    report(7, "(mu+1) GA proxy at n=50, k=3: crossover faster", ok,
           (m && x ? "pc=0.9 " + fmt(x->mean) + " vs pc=0 " + fmt(m->mean) : std::string("missing cells")) + "; " +
               fmt(seconds_since(start), 1) + " s");
}

void criterion_distributions() {
    RngStream rng(8080);
    std::ostringstream detail;
    bool ok = true;

    bool complementary = true;
    for (int t = 0; t < 100'000; ++t) {
        const std::size_t n = 1 + rng.below(150);
        const auto x = sample_uniform(n, rng);
        const auto y = sample_uniform(n, rng);
        const auto [c1, c2] = uniform_crossover_two(x, y, rng);
        complementary = complementary && bit_xor(c1, c2) == bit_xor(x, y) &&
                        count_ones(c1) + count_ones(c2) == count_ones(x) + count_ones(y);
    }
    ok = ok && complementary;
    detail << "complementarity " << (complementary ? "exact" : "VIOLATED") << " on 1e5 pairs";

    const auto base = sample_uniform(100, rng);
    double flips = 0.0;
    for (int t = 0; t < 100'000; ++t) flips += static_cast<double>(hamming(base, bitwise_mutation(base, 0.01, rng)));
    const double mean_flips = flips / 1e5;
    ok = ok && mean_flips >= 0.9 && mean_flips <= 1.1;
    detail << "; mean flips " << fmt(mean_flips, 4);

    constexpr int trials = 10'000;
    // Survival: two identical members, one slot.
    int first = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Individual> pool(2);
        pool[0].genome = BitString::zeros(4);
        pool[1].genome = BitString::ones(4);
        pool[0].objectives = pool[1].objectives = ObjectiveVector{1, 1};
        pool[0].evaluated = pool[1].evaluated = true;
        first += survival_select(std::move(pool), 1, rng).members[0].genome.all_zeros();
    }
    const double survival_freq = static_cast<double>(first) / trials;
    // Tournament between equal rank and crowding.
    RankedPopulation tied;
    tied.members.resize(2);
    tied.rank = {1, 1};
    tied.crowding = {0.5, 0.5};
    int wins = 0;
    for (int t = 0; t < trials; ++t) wins += binary_tournament(tied, 0, 1, rng) == 0;
    const double tournament_freq = static_cast<double>(wins) / trials;
    const auto in_band = [](double f) { return f >= 0.47 && f <= 0.53; };
    ok = ok && in_band(survival_freq) && in_band(tournament_freq);
    detail << "; survival tie " << fmt(survival_freq, 4) << ", tournament tie " << fmt(tournament_freq, 4);

    // (mu+1) GA removal among four equal candidates.
    GaConfig ga;
    ga.spec = {ProblemKind::jump, 20, 2};
    ga.mu = 3;
    ga.pc = 0.0;
    ga.mutation_rate = 0.0;
    std::vector<int> removed(4, 0);
    for (int t = 0; t < trials; ++t) {
        std::vector<Individual> pop(3);
        for (auto& m : pop) {
            m.genome = BitString::zeros(20);
            evaluate(ga.spec, m);
        }
        ++removed[ga_step(pop, ga, rng).removed];
    }
    bool removal_ok = true;
    for (const int r : removed) {
        const double f = static_cast<double>(r) / trials;
        removal_ok = removal_ok && f >= 0.9 / 4 && f <= 1.1 / 4;
    }
    ok = ok && removal_ok;
    detail << "; GA removal " << (removal_ok ? "uniform" : "NOT uniform") << " over 4 candidates";
    report(8, "distributional checks", ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string cli;
    std::string group = "fast";
    std::string work = (fs::temp_directory_path() / "xover_acceptance").string();
    app.add_option("--cli", cli, "Path to the xover executable")->required();
    app.add_option("--group", group, "fast|long|all")->check(CLI::IsMember({"fast", "long", "all"}));
    app.add_option("--work-dir", work, "Scratch directory for CLI outputs");
    CLI11_PARSE(app, argc, argv);

    const fs::path work_dir = work;
    fs::create_directories(work_dir);
    const bool fast = group != "long";
    const bool slow = group != "fast";
    try {
        if (fast) {
            criterion_verify(cli, work_dir);
            criterion_front_size();
            criterion_never_lose();
            criteria_table1(cli, work_dir);
            criterion_ga_proxy();
            criterion_distributions();
        }
        if (slow) {
            criterion_table2();
            criterion_ga_long();
        }
    } catch (const std::exception& e) {
        std::cout << "[FAIL] aborted: " << e.what() << std::endl;
        ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + (failures == 1 ? " check" : " checks") + " failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
