#include "xover/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xover/benchmarks.hpp"
#include "xover/harness.hpp"
#include "xover/oracle.hpp"
#include "xover/report.hpp"

namespace xover {

namespace {

struct OutputOptions {
    std::string out;
    std::string summary;
    std::string svg;
};

void print_summary(std::ostream& out, const ExperimentResult& result) {
    for (const auto& cr : result.cells) {
        const auto& s = cr.summary;
        out << cr.cell.label() << ": " << s.successes << "/" << s.reps << " successful";
        if (s.mean_evaluations) out << ", mean evaluations " << std::fixed << std::setprecision(0) << *s.mean_evaluations;
        if (s.std_evaluations) out << " (sd " << std::fixed << std::setprecision(0) << *s.std_evaluations << ")";
        if (s.diversity_mean) {
            out << ", diversity " << std::fixed << std::setprecision(2) << *s.diversity_mean;
            if (s.diversity_std) out << " +- " << *s.diversity_std;
        }
        out << '\n';
        out.unsetf(std::ios::floatfield);
    }
}

void write_outputs(const ExperimentResult& result, const OutputOptions& opts, std::ostream& out) {
    const std::filesystem::path runs = opts.out;
    const std::filesystem::path summary = opts.summary.empty() ? summary_path_for(runs) : std::filesystem::path(opts.summary);
    emit_csv(result, runs, summary);
    out << "wrote " << runs.string() << ", " << summary.string() << ", " << metadata_path_for(runs).string() << '\n';
    if (!opts.svg.empty()) {
        emit_svg(result, opts.svg, default_axes(result));
        out << "wrote " << opts.svg << '\n';
    }
}

void add_outputs(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--out", opts.out, "Per-run CSV path")->required();
    cmd->add_option("--summary", opts.summary, "Per-cell summary CSV path (default <out stem>_summary.csv)");
    cmd->add_option("--svg", opts.svg, "Chart of mean evaluations vs population size");
}

int report_oracle(std::ostream& out, const std::string& name, const oracle::OracleReport& report) {
    out << (report.passed() ? "[PASS] " : "[FAIL] ") << name << ": " << report.cases_run << " cases, "
        << report.mismatches.size() << " mismatches\n";
    for (std::size_t i = 0; i < report.mismatches.size() && i < 5; ++i) {
        const auto& m = report.mismatches[i];
        out << "  " << m.input << "\n    expected " << m.expected << "\n    actual   " << m.actual << '\n';
    }
    return report.passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"NSGA-II and (mu+1) GA with crossover on OneJumpZeroJump and Jump"};
    app.require_subcommand(1);

    ExperimentConfig nsga;
    nsga.algorithm = Algorithm::nsga2;
    std::vector<std::size_t> pop_factors;
    std::string selection = "fair";
    std::string crowding_ties = "random";
    std::uint64_t nsga_max_evals = 0;
    OutputOptions nsga_out;
    auto* run_nsga2 = app.add_subcommand("run-nsga2", "NSGA-II on OneJumpZeroJump");
    run_nsga2->add_option("--n", nsga.n, "Bit-string length")->required();
    run_nsga2->add_option("--k", nsga.k, "Jump size")->required();
    auto* pop_size_opt = run_nsga2->add_option("--pop-size", nsga.pop_sizes, "Population size N (comma list)")->delimiter(',');
    auto* pop_factor_opt =
        run_nsga2->add_option("--pop-factor", pop_factors, "N = c(n-2k+3) for each c (comma list)")->delimiter(',');
    pop_size_opt->excludes(pop_factor_opt);
    run_nsga2->add_option("--pc", nsga.pcs, "Crossover probability (comma list)")->delimiter(',')->required();
    run_nsga2->add_option("--selection", selection, "fair|uniform|tournament|two-permutation")
        ->check(CLI::IsMember({"fair", "uniform", "tournament", "two-permutation"}));
    run_nsga2->add_option("--crowding-ties", crowding_ties, "Order of equal objective values in crowding: random|index")
        ->check(CLI::IsMember({"random", "index"}));
    run_nsga2->add_option("--reps", nsga.reps, "Repetitions per cell")->check(CLI::PositiveNumber);
    run_nsga2->add_option("--seed", nsga.base_seed, "Base seed");
    auto* nsga_budget = run_nsga2->add_option("--max-evals", nsga_max_evals, "Evaluation budget per run");
    run_nsga2->add_flag("--probe-diversity", nsga.probe_diversity, "Record boundary diversity every floor(n^k/50) iterations");
    run_nsga2->add_flag("--check-invariants", nsga.check_invariants, "Verify survival and crowding invariants every step");
    run_nsga2->add_option("--threads", nsga.threads, "OpenMP threads (0 = default)");
    add_outputs(run_nsga2, nsga_out);

    ExperimentConfig ga;
    ga.algorithm = Algorithm::ga;
    std::uint64_t ga_max_evals = 0;
    OutputOptions ga_out;
    auto* run_ga = app.add_subcommand("run-ga", "(mu+1) GA on Jump");
    run_ga->add_option("--n", ga.n, "Bit-string length")->required();
    run_ga->add_option("--k", ga.k, "Jump size")->required();
    run_ga->add_option("--mu", ga.mus, "Population sizes (comma list)")->delimiter(',')->required();
    run_ga->add_option("--pc", ga.pcs, "Crossover probability (comma list)")->delimiter(',')->required();
    run_ga->add_option("--reps", ga.reps, "Repetitions per cell")->check(CLI::PositiveNumber);
    run_ga->add_option("--seed", ga.base_seed, "Base seed");
    auto* ga_budget = run_ga->add_option("--max-evals", ga_max_evals, "Evaluation budget per run");
    run_ga->add_option("--threads", ga.threads, "OpenMP threads (0 = default)");
    add_outputs(run_ga, ga_out);

    std::size_t cases = 1000;
    std::size_t max_n = 14;
    std::size_t sort_max_n = 8;
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "Check the fast paths against brute-force oracles");
    verify->add_option("--cases", cases, "Random populations for the sorting and crowding check");
    verify->add_option("--max-n", max_n, "Largest n for the enumerated front check (<= 16)")->check(CLI::Range(8, 16));
    verify->add_option("--sort-max-n", sort_max_n, "Largest genome length in the random populations");
    verify->add_option("--seed", verify_seed, "Seed for the random populations");

    std::string which;
    std::uint64_t table_seed = 0;
    std::string out_dir = ".";
    std::size_t table_reps = 0;
    int table_threads = 0;
    auto* tables = app.add_subcommand("tables", "Preset experiments: tables 1 and 2, figures 1 and 2");
    tables->add_option("--which", which, "1|2|fig1|fig2")->required()->check(CLI::IsMember({"1", "2", "fig1", "fig2"}));
    tables->add_option("--seed", table_seed, "Base seed")->required();
    tables->add_option("--out-dir", out_dir, "Directory for <preset>_runs.csv, _summary.csv, .meta.json, .svg");
    tables->add_option("--reps", table_reps, "Override the preset's repetitions");
    tables->add_option("--threads", table_threads, "OpenMP threads (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*run_nsga2) {
            nsga.selection = parse_selection(selection);
            nsga.crowding_ties = parse_crowding_ties(crowding_ties);
            if (*nsga_budget) nsga.max_evals = nsga_max_evals;
            if (!pop_factors.empty()) {
                const ProblemSpec spec{ProblemKind::ojzj, nsga.n, nsga.k};
                for (const auto c : pop_factors) nsga.pop_sizes.push_back(Nsga2Config::pop_size_for_factor(c, spec));
            }
            if (nsga.pop_sizes.empty()) {
                err << "run-nsga2: one of --pop-size or --pop-factor is required\n";
                return 2;
            }
            const auto result = run_experiment(nsga);
            print_summary(out, result);
            write_outputs(result, nsga_out, out);
            return 0;
        }
        if (*run_ga) {
            if (*ga_budget) ga.max_evals = ga_max_evals;
            const auto result = run_experiment(ga);
            print_summary(out, result);
            write_outputs(result, ga_out, out);
            return 0;
        }
        if (*verify) {
            const auto start = std::chrono::steady_clock::now();
            int failures = 0;
            failures += report_oracle(out, "ranks and crowding vs brute force",
                                      oracle::verify_sorting(cases, sort_max_n, verify_seed));
            failures += report_oracle(out, "pareto_front vs enumeration n in [8.." + std::to_string(max_n) + "]",
                                      oracle::verify_fronts(8, max_n));
            oracle::OracleReport sizes;
            for (std::size_t n = 8; n <= 200; ++n) {
                for (std::size_t k = 2; k <= n / 4; ++k) {
                    ++sizes.cases_run;
                    const auto got = pareto_front(n, k).size();
                    if (got != n - 2 * k + 3) {
                        sizes.mismatches.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                                                    std::to_string(n - 2 * k + 3), std::to_string(got)});
                    }
                }
            }
            failures += report_oracle(out, "front size n-2k+3 for n in [8..200]", sizes);
            const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
            out << "verify finished in " << std::fixed << std::setprecision(2) << took.count() << " s\n";
            return failures == 0 ? 0 : 1;
        }
        if (*tables) {
            const TablePreset preset = parse_preset(which);
            ExperimentConfig cfg = preset_config(preset, table_seed);
            if (table_reps > 0) cfg.reps = table_reps;
            cfg.threads = table_threads;
            const auto result = run_experiment(cfg);
            print_summary(out, result);
            const std::filesystem::path dir = out_dir;
            std::filesystem::create_directories(dir);
            const std::string stem = preset_name(preset);
            OutputOptions opts;
            opts.out = (dir / (stem + "_runs.csv")).string();
            opts.summary = (dir / (stem + "_summary.csv")).string();
            opts.svg = (dir / (stem + ".svg")).string();
            write_outputs(result, opts, out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace xover
