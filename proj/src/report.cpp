#include "rankforge/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>

#include <json.hpp>

namespace rankforge {

namespace {

using nlohmann::ordered_json;

const std::map<std::string, ScaleTarget> kTargets = {
    {"matrix", ScaleTarget::MatrixOnly},
    {"weights", ScaleTarget::WeightsOnly},
    {"both", ScaleTarget::Both},
};

bool is_scaler_kind(const std::string& kind) {
    return kind == "sum_scaler" || kind == "vector_scaler" || kind == "minmax_scaler";
}

const std::set<std::string> kKnownKinds = {
    "invert_minimize", "negate_minimize", "filter_gt", "filter_non_dominated",
    "sum_scaler",      "vector_scaler",   "minmax_scaler", "wsm", "topsis"};

ComponentDescriptor descriptor_from_json(const ordered_json& node, const std::string& where) {
    if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string()) {
        throw Error(where + ": component descriptor needs a string 'kind'");
    }
    ComponentDescriptor d;
    d.kind = node["kind"].get<std::string>();
    if (kKnownKinds.count(d.kind) == 0) {
        throw Error("unknown component kind '" + d.kind + "'");
    }
    const ordered_json params = node.value("params", ordered_json::object());
    if (!params.is_object()) throw Error(where + ": 'params' must be an object");

    if (is_scaler_kind(d.kind)) {
        const std::string target = params.value("target", "matrix");
        auto it = kTargets.find(target);
        if (it == kTargets.end()) {
            throw Error(where + ": unknown scale target '" + target +
                        "' (expected matrix, weights, or both)");
        }
        d.target = it->second;
    } else if (d.kind == "filter_gt") {
        if (!params.contains("thresholds") || !params["thresholds"].is_object()) {
            throw Error(where + ": filter_gt needs a 'thresholds' object");
        }
        for (const auto& [criterion, value] : params["thresholds"].items()) {
            if (!value.is_number()) {
                throw Error(where + ": threshold for '" + criterion + "' must be a number");
            }
            d.thresholds[criterion] = value.get<double>();
        }
    }
    return d;
}

}  // namespace

Component component_from_descriptor(const ComponentDescriptor& d) {
    if (d.kind == "invert_minimize") return components::invert_minimize();
    if (d.kind == "negate_minimize") return components::negate_minimize();
    if (d.kind == "filter_gt") return components::filter_gt(d.thresholds);
    if (d.kind == "filter_non_dominated") return components::filter_non_dominated();
    if (d.kind == "sum_scaler") return components::sum_scaler(d.target);
    if (d.kind == "vector_scaler") return components::vector_scaler(d.target);
    if (d.kind == "minmax_scaler") return components::minmax_scaler(d.target);
    if (d.kind == "wsm") return components::weighted_sum_model();
    if (d.kind == "topsis") return components::topsis();
    throw Error("unknown component kind '" + d.kind + "'");
}

SweepConfig parse_sweep_config(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("config must be a JSON object");

    SweepConfig config;
    config.matrix_path = doc.value("matrix_path", "");

    if (!doc.contains("objectives") || !doc["objectives"].is_array()) {
        throw Error("config needs an 'objectives' array of \"max\"/\"min\" strings");
    }
    for (std::size_t j = 0; j < doc["objectives"].size(); ++j) {
        const auto& o = doc["objectives"][j];
        if (o == "max") {
            config.objectives.push_back(Objective::Max);
        } else if (o == "min") {
            config.objectives.push_back(Objective::Min);
        } else {
            throw Error("objectives[" + std::to_string(j) +
                        "] must be \"max\" or \"min\", got " + o.dump());
        }
    }

    if (doc.contains("weights")) {
        if (!doc["weights"].is_array()) throw Error("'weights' must be an array of numbers");
        for (std::size_t j = 0; j < doc["weights"].size(); ++j) {
            const auto& w = doc["weights"][j];
            if (!w.is_number()) {
                throw Error("weights[" + std::to_string(j) + "] must be a number");
            }
            config.weights.push_back(w.get<double>());
        }
    }

    if (!doc.contains("steps") || !doc["steps"].is_array() || doc["steps"].empty()) {
        throw Error("config needs a nonempty 'steps' array");
    }
    for (std::size_t s = 0; s < doc["steps"].size(); ++s) {
        const auto& step = doc["steps"][s];
        const std::string where = "steps[" + std::to_string(s) + "]";
        std::vector<ComponentDescriptor> alternatives;
        if (step.is_array()) {
            if (step.empty()) throw Error(where + " is an empty alternative list");
            for (std::size_t a = 0; a < step.size(); ++a) {
                alternatives.push_back(
                    descriptor_from_json(step[a], where + "[" + std::to_string(a) + "]"));
            }
        } else {
            alternatives.push_back(descriptor_from_json(step, where));
        }
        config.steps.push_back(std::move(alternatives));
    }
    return config;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path.string() + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_sweep_config(text);
}

namespace {

CombinatorialSpec spec_from_config(const SweepConfig& config) {
    std::vector<CombinatorialSpec::Step> steps;
    steps.reserve(config.steps.size());
    for (std::size_t s = 0; s < config.steps.size(); ++s) {
        CombinatorialSpec::Step step;
        for (std::size_t a = 0; a < config.steps[s].size(); ++a) {
            try {
                step.push_back(component_from_descriptor(config.steps[s][a]));
            } catch (const std::exception& e) {
                throw Error("steps[" + std::to_string(s) + "][" + std::to_string(a) +
                            "]: " + e.what());
            }
        }
        steps.push_back(std::move(step));
    }
    return CombinatorialSpec(std::move(steps));
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config, const DecisionMatrix& dm, int jobs) {
    const CombinatorialSpec spec = spec_from_config(config);

    const auto start = std::chrono::steady_clock::now();
    const RanksComparator comparator = evaluate_all(spec, dm, jobs);
    const auto stop = std::chrono::steady_clock::now();

    SweepReport report;
    report.pipelines = comparator.names();
    report.alternatives = comparator.alternatives();
    report.ranks = rank_table(comparator);
    report.scores.assign(report.alternatives.size(),
                         std::vector<double>(comparator.size(), 0.0));
    for (std::size_t j = 0; j < comparator.size(); ++j) {
        for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
            report.scores[i][j] = comparator.at(j).scores[i];
        }
    }
    if (comparator.size() >= 2) {
        report.correlation = corr(comparator);
        report.covariance = cov(comparator);
        report.r2 = r2_score(comparator);
        report.dist = distance(comparator);
    } else {
        report.notice = "metric matrices omitted: they need at least 2 pipelines";
    }
    report.rank_distribution = distribution(comparator);
    report.combinations = spec.combination_count();
    report.jobs = jobs;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

SweepReport run_sweep(const SweepConfig& config, int jobs) {
    if (config.matrix_path.empty()) {
        throw Error("config has no matrix_path and no --matrix override was given");
    }
    const DecisionMatrix dm =
        load_matrix_csv(config.matrix_path, config.objectives, config.weights);
    return run_sweep(config, dm, jobs);
}

namespace {

ordered_json metric_to_json(const MetricMatrix& m) {
    ordered_json cells = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
        cells.push_back(std::move(row));
    }
    return ordered_json{{"labels", m.labels}, {"cells", std::move(cells)}};
}

}  // namespace

std::string report_json_text(const SweepReport& report) {
    ordered_json doc;
    doc["metadata"] = ordered_json{{"combinations", report.combinations},
                                   {"jobs", report.jobs},
                                   {"wall_time_ms", report.wall_time_ms}};
    if (!report.notice.empty()) doc["metadata"]["notice"] = report.notice;
    doc["pipelines"] = report.pipelines;
    doc["alternatives"] = report.alternatives;
    doc["ranks"] = report.ranks;
    doc["scores"] = report.scores;
    if (report.correlation) {
        doc["metrics"] = ordered_json{{"corr", metric_to_json(*report.correlation)},
                                      {"cov", metric_to_json(*report.covariance)},
                                      {"r2", metric_to_json(*report.r2)},
                                      {"distance", metric_to_json(*report.dist)}};
    }
    ordered_json dist_rows = ordered_json::array();
    for (std::size_t i = 0; i < report.rank_distribution.alternatives.size(); ++i) {
        const auto& s = report.rank_distribution.rows[i];
        dist_rows.push_back(ordered_json{{"alternative", report.rank_distribution.alternatives[i]},
                                         {"min", s.min},
                                         {"q1", s.q1},
                                         {"median", s.median},
                                         {"q3", s.q3},
                                         {"max", s.max}});
    }
    doc["distribution"] = std::move(dist_rows);
    return doc.dump(2) + "\n";
}

void write_report_json(const SweepReport& report, const std::filesystem::path& path) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write report to '" + path.string() + "'");
    out << report_json_text(report);
    if (!out) throw Error("failed writing report to '" + path.string() + "'");
}

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Quoting is only needed if a label ever carries a comma or quote.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string metric_csv(const MetricMatrix& m) {
    std::string text = "name";
    for (const auto& label : m.labels) text += "," + csv_field(label);
    text += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        text += csv_field(m.labels[i]);
        for (std::size_t j = 0; j < m.size(); ++j) text += "," + num17(m.at(i, j));
        text += '\n';
    }
    return text;
}

}  // namespace

void write_report_csv_dir(const SweepReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    std::string header = "alternative";
    for (const auto& name : report.pipelines) header += "," + csv_field(name);
    header += '\n';

    std::string ranks = header;
    std::string scores = header;
    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
        ranks += csv_field(report.alternatives[i]);
        scores += csv_field(report.alternatives[i]);
        for (std::size_t j = 0; j < report.pipelines.size(); ++j) {
            ranks += "," + std::to_string(report.ranks[i][j]);
            scores += "," + num17(report.scores[i][j]);
        }
        ranks += '\n';
        scores += '\n';
    }
    write_file(dir / "ranks.csv", ranks);
    write_file(dir / "scores.csv", scores);

    if (report.correlation) {
        write_file(dir / "corr.csv", metric_csv(*report.correlation));
        write_file(dir / "cov.csv", metric_csv(*report.covariance));
        write_file(dir / "r2.csv", metric_csv(*report.r2));
        write_file(dir / "distance.csv", metric_csv(*report.dist));
    }

    std::string dist = "alternative,min,q1,median,q3,max\n";
    for (std::size_t i = 0; i < report.rank_distribution.alternatives.size(); ++i) {
        const auto& s = report.rank_distribution.rows[i];
        dist += csv_field(report.rank_distribution.alternatives[i]);
        dist += "," + num17(s.min) + "," + num17(s.q1) + "," + num17(s.median) + "," +
                num17(s.q3) + "," + num17(s.max) + '\n';
    }
    write_file(dir / "distribution.csv", dist);

    ordered_json metadata{{"combinations", report.combinations},
                          {"jobs", report.jobs},
                          {"wall_time_ms", report.wall_time_ms}};
    if (!report.notice.empty()) metadata["notice"] = report.notice;
    write_file(dir / "metadata.json", metadata.dump(2) + "\n");
}

}  // namespace rankforge
