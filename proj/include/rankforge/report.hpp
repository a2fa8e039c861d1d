#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankforge/combinatorial.hpp"
#include "rankforge/csv.hpp"

namespace rankforge {

/// Declarative form of one pipeline component. `kind` is drawn from a closed
/// set; params depend on the kind (scalers take a target, filter_gt takes a
/// criterion->threshold map).
struct ComponentDescriptor {
    std::string kind;
    ScaleTarget target = ScaleTarget::MatrixOnly;
    std::map<std::string, double> thresholds;
};

/// Declarative sweep: where the matrix lives, how its criteria are oriented
/// and weighted, and the step-wise component alternatives.
struct SweepConfig {
    std::string matrix_path;
    std::vector<Objective> objectives;
    std::vector<double> weights;  // empty = uniform
    std::vector<std::vector<ComponentDescriptor>> steps;
};

Component component_from_descriptor(const ComponentDescriptor& d);

/// Parses the sweep-config JSON document (see README for the schema).
SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

/// Everything a sweep produces: per-pipeline untied ranks and scores, the
/// four pairwise metric matrices (absent when fewer than two pipelines ran),
/// the rank-distribution summary, and run metadata.
struct SweepReport {
    std::vector<std::string> pipelines;
    std::vector<std::string> alternatives;
    std::vector<std::vector<int>> ranks;      // m x k, untied
    std::vector<std::vector<double>> scores;  // m x k
    std::optional<MetricMatrix> correlation;
    std::optional<MetricMatrix> covariance;
    std::optional<MetricMatrix> r2;
    std::optional<MetricMatrix> dist;
    RankDistribution rank_distribution;
    std::size_t combinations = 0;
    int jobs = 0;
    double wall_time_ms = 0.0;
    std::string notice;  // set when metrics are omitted (k < 2)
};

/// Builds the spec from the config, runs evaluate_all, and assembles the
/// report. jobs <= 0 means all available threads.
SweepReport run_sweep(const SweepConfig& config, int jobs = 0);

/// Same, but over an already loaded matrix (the CLI loads once and reuses).
SweepReport run_sweep(const SweepConfig& config, const DecisionMatrix& dm, int jobs = 0);

/// One JSON document carrying every table and matrix. Deterministic: equal
/// reports serialize to identical bytes; numeric fields round-trip exactly.
std::string report_json_text(const SweepReport& report);

void write_report_json(const SweepReport& report, const std::filesystem::path& path);

/// One CSV per table (ranks, scores, corr, cov, r2, distance, distribution)
/// plus metadata.json, in the given directory. Numeric cells use 17
/// significant digits so they survive a round-trip.
void write_report_csv_dir(const SweepReport& report, const std::filesystem::path& dir);

}  // namespace rankforge
