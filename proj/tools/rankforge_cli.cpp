// rankforge: combinatorial MCDM sweeps from the command line.
//
//   rankforge evaluate --config pipeline.json --matrix data.csv --out report.json
//   rankforge sweep    --config sweep.json --format csv --out report_dir --svg heatmap
//
// Exit status is 0 on success; any failure prints a single-line error on
// stderr and returns nonzero.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankforge/report.hpp"
#include "rankforge/svg.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string matrix;
    std::string config;
    std::string out;
    std::string format = "json";
    std::vector<std::string> svg;
    int jobs = 0;
    long long seed = 0;  // reserved; the engine is deterministic
};

void add_common_flags(CLI::App& cmd, CommonOptions& opt) {
    cmd.add_option("--matrix", opt.matrix, "Decision-matrix CSV (overrides config matrix_path)");
    cmd.add_option("--config", opt.config, "Sweep/pipeline config JSON")->required();
    cmd.add_option("--out", opt.out, "Output file (json) or directory (csv)");
    cmd.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd.add_option("--svg", opt.svg, "Also render charts (repeatable)")
        ->check(CLI::IsMember({"boxplot", "heatmap"}));
    cmd.add_option("--jobs", opt.jobs,
                   "Parallel pipeline evaluations (default: RANKFORGE_JOBS or all CPUs)");
    cmd.add_option("--seed", opt.seed, "Reserved; accepted for interface stability");
}

int resolve_jobs(const CLI::App& cmd, int flag_value) {
    if (cmd.count("--jobs") > 0) return flag_value;
    if (const char* env = std::getenv("RANKFORGE_JOBS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw rankforge::Error(std::string("RANKFORGE_JOBS is not an integer: '") + env +
                                   "'");
        }
    }
    return 0;
}

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') c = ';';
    }
    return text;
}

int run(const CLI::App& cmd, CommonOptions& opt, bool single_pipeline) {
    rankforge::SweepConfig config = rankforge::load_sweep_config(opt.config);
    if (!opt.matrix.empty()) config.matrix_path = opt.matrix;

    if (single_pipeline) {
        for (std::size_t s = 0; s < config.steps.size(); ++s) {
            if (config.steps[s].size() != 1) {
                throw rankforge::Error("evaluate runs a single pipeline, but steps[" +
                                       std::to_string(s) + "] lists " +
                                       std::to_string(config.steps[s].size()) +
                                       " alternatives; use the sweep subcommand");
            }
        }
    }

    const int jobs = resolve_jobs(cmd, opt.jobs);
    const rankforge::SweepReport report = rankforge::run_sweep(config, jobs);

    const bool csv = opt.format == "csv";
    fs::path out = opt.out.empty() ? fs::path(csv ? "report" : "report.json")
                                   : fs::path(opt.out);
    if (csv) {
        rankforge::write_report_csv_dir(report, out);
    } else {
        rankforge::write_report_json(report, out);
    }

    for (const auto& kind : opt.svg) {
        const auto svg_kind = kind == "boxplot" ? rankforge::SvgKind::Boxplot
                                                : rankforge::SvgKind::Heatmap;
        fs::path svg_path = csv ? out / (kind + ".svg")
                                : out.parent_path() / (out.stem().string() + "." + kind + ".svg");
        rankforge::render_svg(report, svg_kind, svg_path);
    }

    std::cout << report.pipelines.size() << " pipeline(s) evaluated over "
              << report.alternatives.size() << " alternative(s) in " << report.wall_time_ms
              << " ms -> " << out.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial MCDM pipelines with rank-comparison reports"};
    app.require_subcommand(1);

    CommonOptions evaluate_opt;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Run one pipeline over a matrix");
    add_common_flags(*evaluate, evaluate_opt);

    CommonOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Expand and run a combinatorial sweep");
    add_common_flags(*sweep, sweep_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (evaluate->parsed()) return run(*evaluate, evaluate_opt, true);
        return run(*sweep, sweep_opt, false);
    } catch (const std::exception& e) {
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return 1;
    }
}
