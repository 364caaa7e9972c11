#include "xover/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "xover/diversity.hpp"
#include "xover/rng.hpp"

namespace xover {

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

template <typename T>
std::string opt(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>) {
        return format_number(*v);
    } else if constexpr (std::is_same_v<T, bool>) {
        return *v ? "1" : "0";
    } else {
        return std::to_string(*v);
    }
}

/// NSGA-II: number of extremal points whose first offspring came from
/// crossover. GA: whether the optimum did. Empty if nothing was found.
std::string crossover_made_extremal(const RunResult& r, Algorithm algorithm) {
    if (algorithm == Algorithm::ga) return opt(r.optimum_by_crossover);
    if (!r.all_ones_by_crossover && !r.all_zeros_by_crossover) return "";
    const int count = static_cast<int>(r.all_ones_by_crossover.value_or(false)) +
                      static_cast<int>(r.all_zeros_by_crossover.value_or(false));
    return std::to_string(count);
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << fields[i];
    }
    os << '\n';
}

std::vector<std::string> cell_fields(const Cell& c) {
    const bool nsga = c.algorithm == Algorithm::nsga2;
    return {std::string(to_string(c.algorithm)),
            std::string(to_string(c.spec.kind)),
            std::to_string(c.spec.n),
            std::to_string(c.spec.k),
            nsga ? std::to_string(c.pop_size) : "",
            nsga ? "" : std::to_string(c.pop_size),
            format_number(c.pc),
            nsga ? std::string(to_string(c.selection)) : ""};
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
    os.flush();
    if (!os) throw std::runtime_error("error while writing " + path.string());
}

}  // namespace

const std::vector<std::string>& run_csv_columns() {
    static const std::vector<std::string> columns{
        "run_id",      "algorithm",        "problem",          "n",
        "k",           "pop_size",         "mu",               "pc",
        "selection",   "seed",             "evaluations",      "iterations",
        "success",     "inner_cover_iter", "first_extremal_iter", "second_extremal_iter",
        "diversity_mean", "crossover_made_extremal"};
    return columns;
}

const std::vector<std::string>& summary_csv_columns() {
    static const std::vector<std::string> columns{
        "cell_id",   "algorithm",        "problem",         "n",          "k",
        "pop_size",  "mu",               "pc",              "selection",  "reps",
        "successes", "success_rate",     "mean_evaluations", "std_evaluations",
        "diversity_mean", "diversity_std", "diversity_runs"};
    return columns;
}

void write_runs_csv(std::ostream& os, const ExperimentResult& result) {
    write_row(os, run_csv_columns());
    std::size_t run_id = 0;
    for (const auto& cr : result.cells) {
        const auto base = cell_fields(cr.cell);
        for (const auto& r : cr.runs) {
            std::vector<std::string> row{std::to_string(run_id++)};
            row.insert(row.end(), base.begin(), base.end());
            row.push_back(std::to_string(r.seed));
            row.push_back(std::to_string(r.evaluations));
            row.push_back(std::to_string(r.iterations));
            row.push_back(r.success ? "1" : "0");
            if (cr.cell.algorithm == Algorithm::nsga2) {
                row.push_back(opt(r.inner_cover_iter));
                row.push_back(opt(r.first_extremal_iter));
                row.push_back(opt(r.second_extremal_iter));
            } else {
                row.push_back(opt(r.plateau_iter));
                row.push_back(opt(r.optimum_iter));
                row.push_back("");
            }
            row.push_back(opt(windowed_mean(r.diversity)));
            row.push_back(crossover_made_extremal(r, cr.cell.algorithm));
            write_row(os, row);
        }
    }
}

void write_summary_csv(std::ostream& os, const ExperimentResult& result) {
    write_row(os, summary_csv_columns());
    for (const auto& cr : result.cells) {
        const auto& s = cr.summary;
        std::vector<std::string> row{std::to_string(cr.cell.index)};
        const auto base = cell_fields(cr.cell);
        row.insert(row.end(), base.begin(), base.end());
        row.push_back(std::to_string(s.reps));
        row.push_back(std::to_string(s.successes));
        row.push_back(format_number(s.success_rate));
        row.push_back(opt(s.mean_evaluations));
        row.push_back(opt(s.std_evaluations));
        row.push_back(opt(s.diversity_mean));
        row.push_back(opt(s.diversity_std));
        row.push_back(std::to_string(s.diversity_runs));
        write_row(os, row);
    }
}

void write_metadata_json(std::ostream& os, const ExperimentResult& result) {
    const auto& c = result.config;
    nlohmann::ordered_json j;
    j["rng"] = std::string(RngStream::algorithm);
    j["seed_derivation"] = "run_seed = derive(derive(base_seed, cell_id), rep)";
    j["algorithm"] = std::string(to_string(c.algorithm));
    j["n"] = c.n;
    j["k"] = c.k;
    j["reps"] = c.reps;
    j["base_seed"] = c.base_seed;
    j["probe_diversity"] = c.probe_diversity;
    if (c.probe_diversity) j["probe_interval"] = probe_interval(c.n, c.k);
    j["mutation_rate"] = c.mutation_rate ? format_number(*c.mutation_rate) : "1/n";
    auto cells = nlohmann::ordered_json::array();
    for (const auto& cr : result.cells) {
        nlohmann::ordered_json cell;
        cell["cell_id"] = cr.cell.index;
        cell["pop_size"] = cr.cell.pop_size;
        cell["pc"] = format_number(cr.cell.pc);
        if (cr.cell.algorithm == Algorithm::nsga2) {
            cell["selection"] = std::string(to_string(cr.cell.selection));
            cell["crowding_ties"] = std::string(to_string(cr.cell.crowding_ties));
        }
        cell["max_evals"] = cr.cell.max_evals;
        cells.push_back(cell);
    }
    j["cells"] = cells;
    os << j.dump(2) << '\n';
}

std::filesystem::path summary_path_for(const std::filesystem::path& runs_csv) {
    auto p = runs_csv;
    p.replace_filename(runs_csv.stem().string() + "_summary.csv");
    return p;
}

std::filesystem::path metadata_path_for(const std::filesystem::path& runs_csv) {
    auto p = runs_csv;
    p.replace_filename(runs_csv.stem().string() + ".meta.json");
    return p;
}

void emit_csv(const ExperimentResult& result, const std::filesystem::path& runs_csv,
              const std::filesystem::path& summary_csv) {
    {
        auto os = open_for_write(runs_csv);
        write_runs_csv(os, result);
        finish(os, runs_csv);
    }
    {
        auto os = open_for_write(summary_csv);
        write_summary_csv(os, result);
        finish(os, summary_csv);
    }
    const auto meta = metadata_path_for(runs_csv);
    auto os = open_for_write(meta);
    write_metadata_json(os, result);
    finish(os, meta);
}

SvgAxes default_axes(const ExperimentResult& result) {
    SvgAxes axes;
    axes.x_label = result.config.algorithm == Algorithm::nsga2 ? "population size N" : "population size mu";
    return axes;
}

namespace {

struct Point {
    double x;
    double y;
};

std::string escape(std::string_view s) {
    std::string out;
    for (const char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string fixed(double v, int digits = 2) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

}  // namespace

void write_svg(std::ostream& os, const ExperimentResult& result, const SvgAxes& axes) {
    constexpr double width = 720;
    constexpr double height = 460;
    constexpr double left = 90;
    constexpr double right = 160;
    constexpr double top = 40;
    constexpr double bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    std::map<double, std::vector<Point>> series;
    for (const auto& cr : result.cells) {
        if (!cr.summary.mean_evaluations) continue;
        series[cr.cell.pc].push_back({static_cast<double>(cr.cell.pop_size), *cr.summary.mean_evaluations});
    }
    const auto tx = [&](double x) { return axes.log_x ? std::log(x) / std::log(axes.x_base) : x; };
    const auto ty = [&](double y) { return axes.log_y ? std::log10(y) : y; };

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (auto& [pc, pts] : series) {
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
        for (const auto& p : pts) {
            const double x = tx(p.x);
            const double y = ty(p.y);
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;
    const auto px = [&](double x) { return left + (tx(x) - xmin) / (xmax - xmin) * plot_w; };
    const auto py = [&](double y) { return top + plot_h - (ty(y) - ymin) / (ymax - ymin) * plot_h; };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    const auto& cfg = result.config;
    os << "  <text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
       << escape(std::string(to_string(cfg.algorithm)) + " on " +
                 (cfg.algorithm == Algorithm::nsga2 ? "OneJumpZeroJump" : "Jump") + ", n=" + std::to_string(cfg.n) +
                 ", k=" + std::to_string(cfg.k) + ", mean evaluations")
       << "</text>\n";
    os << "  <rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks at every swept value.
    std::vector<double> xs;
    for (const auto& [pc, pts] : series) {
        for (const auto& p : pts) xs.push_back(p.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const double x : xs) {
        os << "  <line x1=\"" << fixed(px(x)) << "\" y1=\"" << top + plot_h << "\" x2=\"" << fixed(px(x))
           << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"black\"/>\n";
        os << "  <text x=\"" << fixed(px(x)) << "\" y=\"" << top + plot_h + 20
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << format_number(x)
           << "</text>\n";
    }
    // y ticks: five evenly spaced in the transformed scale.
    for (int i = 0; i <= 4; ++i) {
        const double t = ymin + (ymax - ymin) * i / 4.0;
        const double value = axes.log_y ? std::pow(10.0, t) : t;
        const double y = top + plot_h - (t - ymin) / (ymax - ymin) * plot_h;
        os << "  <line x1=\"" << left - 5 << "\" y1=\"" << fixed(y) << "\" x2=\"" << left << "\" y2=\"" << fixed(y)
           << "\" stroke=\"black\"/>\n";
        std::ostringstream label;
        label.precision(3);
        label << value;
        os << "  <text x=\"" << left - 8 << "\" y=\"" << fixed(y + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << label.str() << "</text>\n";
    }
    os << "  <text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
       << escape(axes.x_label + (axes.log_x ? " (log" + format_number(axes.x_base) + ")" : "")) << "</text>\n";
    os << "  <text x=\"20\" y=\"" << top + plot_h / 2 << "\" font-family=\"sans-serif\" font-size=\"12\" "
       << "text-anchor=\"middle\" transform=\"rotate(-90 20 " << top + plot_h / 2 << ")\">"
       << (axes.log_y ? "mean evaluations (log10)" : "mean evaluations") << "</text>\n";

    std::size_t s = 0;
    for (const auto& [pc, pts] : series) {
        const char* color = colors[s % (sizeof(colors) / sizeof(colors[0]))];
        os << "  <g class=\"series\" data-pc=\"" << format_number(pc) << "\">\n";
        if (pts.size() > 1) {
            os << "    <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                os << (i ? " " : "") << fixed(px(pts[i].x)) << ',' << fixed(py(pts[i].y));
            }
            os << "\"/>\n";
        }
        for (const auto& p : pts) {
            os << "    <circle cx=\"" << fixed(px(p.x)) << "\" cy=\"" << fixed(py(p.y)) << "\" r=\"4\" fill=\"" << color
               << "\"/>\n";
        }
        os << "  </g>\n";
        const double ly = top + 20 + 20.0 * static_cast<double>(s);
        os << "  <rect x=\"" << left + plot_w + 15 << "\" y=\"" << ly - 9 << "\" width=\"12\" height=\"12\" fill=\""
           << color << "\"/>\n";
        os << "  <text x=\"" << left + plot_w + 32 << "\" y=\"" << ly + 1
           << "\" font-family=\"sans-serif\" font-size=\"12\">pc=" << format_number(pc) << "</text>\n";
        ++s;
    }
    os << "</svg>\n";
}

void emit_svg(const ExperimentResult& result, const std::filesystem::path& path, const SvgAxes& axes) {
    if (result.cells.empty()) throw std::invalid_argument("emit_svg: no cells");
    auto os = open_for_write(path);
    write_svg(os, result, axes);
    finish(os, path);
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path.string());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace xover
