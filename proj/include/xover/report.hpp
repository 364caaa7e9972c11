#pragma once

/// @file report.hpp
/// @brief CSV, JSON metadata and SVG output for experiment results.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "xover/harness.hpp"

namespace xover {

/// Column order of the per-run CSV.
[[nodiscard]] const std::vector<std::string>& run_csv_columns();
/// Column order of the per-cell summary CSV.
[[nodiscard]] const std::vector<std::string>& summary_csv_columns();

void write_runs_csv(std::ostream& os, const ExperimentResult& result);
void write_summary_csv(std::ostream& os, const ExperimentResult& result);
/// Deterministic JSON describing the configuration and RNG algorithm.
void write_metadata_json(std::ostream& os, const ExperimentResult& result);

/// "<stem>_summary.csv" next to the runs file.
[[nodiscard]] std::filesystem::path summary_path_for(const std::filesystem::path& runs_csv);
/// "<stem>.meta.json" next to the runs file.
[[nodiscard]] std::filesystem::path metadata_path_for(const std::filesystem::path& runs_csv);

/// Writes runs, summary and metadata. Throws std::runtime_error naming the
/// path that could not be written.
void emit_csv(const ExperimentResult& result, const std::filesystem::path& runs_csv,
              const std::filesystem::path& summary_csv);

struct SvgAxes {
    std::string x_label;
    bool log_x = true;
    double x_base = 2.0;
    bool log_y = true;
};

/// Default axes for the experiment's swept parameter (N or mu, log base 2).
[[nodiscard]] SvgAxes default_axes(const ExperimentResult& result);

void write_svg(std::ostream& os, const ExperimentResult& result, const SvgAxes& axes);
/// Mean evaluations against the swept population size, one series per pc.
void emit_svg(const ExperimentResult& result, const std::filesystem::path& path, const SvgAxes& axes);

/// Plain decimal encoding that reads back to the same double.
[[nodiscard]] std::string format_number(double value);

/// Splits a comma-separated file without quoting into rows of fields.
[[nodiscard]] std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

}  // namespace xover
