#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "rankforge/report.hpp"
#include "rankforge/svg.hpp"

using namespace rankforge;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static std::mt19937 rng(std::random_device{}());
    fs::path dir = fs::temp_directory_path() /
                   ("rankforge_test_" + std::to_string(rng()));
    fs::create_directories(dir);
    return dir;
}

fs::path write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kSweepConfigJson = R"({
  "objectives": ["min", "max", "max"],
  "steps": [
    {"kind": "invert_minimize"},
    [
      {"kind": "sum_scaler", "params": {"target": "matrix"}},
      {"kind": "vector_scaler", "params": {"target": "matrix"}},
      {"kind": "minmax_scaler", "params": {"target": "matrix"}}
    ],
    [{"kind": "wsm"}, {"kind": "topsis"}]
  ]
})";

const char* kMatrixCsv =
    "name,cost,quality,reach\n"
    "A,2.0,7.5,120\n"
    "B,3.5,9.0,80\n"
    "C,1.5,4.0,150\n"
    "D,4.0,8.0,200\n";

SweepReport sample_report(int jobs = 1) {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    SweepConfig config = parse_sweep_config(kSweepConfigJson);
    config.matrix_path = (dir / "m.csv").string();
    return run_sweep(config, jobs);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

// Minimal well-formedness scan: every tag closes, no stray '<'.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const std::size_t end = text.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(pos + 1, end - pos - 1);
        if (tag.starts_with("?") || tag.starts_with("!")) {
            pos = end + 1;
            continue;
        }
        if (tag.starts_with("/")) {
            if (stack.empty()) return false;
            if (stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (!tag.ends_with("/")) {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
        }
        pos = end + 1;
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("load_matrix_csv") {
    const fs::path dir = temp_dir();

    SUBCASE("minimal file loads") {
        const auto path = write_text(dir / "ok.csv", "name,c1\nA,1\nB,2\n");
        const DecisionMatrix dm = load_matrix_csv(path, {Objective::Max}, {1.0});
        CHECK(dm.alternatives() == std::vector<std::string>{"A", "B"});
        CHECK(dm.value(1, 0) == 2.0);
    }
    SUBCASE("omitted weights default to uniform") {
        const auto path = write_text(dir / "u.csv", "name,c1,c2\nA,1,2\n");
        const DecisionMatrix dm = load_matrix_csv(path, {Objective::Max, Objective::Max}, {});
        CHECK(dm.weights() == std::vector<double>{1.0, 1.0});
    }
    SUBCASE("objectives length mismatch") {
        const auto path = write_text(dir / "mismatch.csv", "name,c1,c2\nA,1,2\n");
        CHECK_THROWS_WITH_AS(load_matrix_csv(path, {Objective::Max}, {}),
                             doctest::Contains("objectives"), Error);
    }
    SUBCASE("non-numeric cell cites row and column") {
        const auto path = write_text(dir / "bad.csv", "name,c1\nA,abc\n");
        CHECK_THROWS_WITH_AS(load_matrix_csv(path, {Objective::Max}, {}),
                             doctest::Contains("row 2, column 'c1'"), Error);
        CHECK_THROWS_WITH_AS(load_matrix_csv(path, {Objective::Max}, {}),
                             doctest::Contains("'abc'"), Error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_WITH_AS(load_matrix_csv(dir / "absent.csv", {Objective::Max}, {}),
                             doctest::Contains("cannot open"), Error);
    }
    SUBCASE("quoted fields parse") {
        const auto path = write_text(dir / "q.csv", "name,\"c,1\"\n\"A \"\"x\"\"\",3\n");
        const DecisionMatrix dm = load_matrix_csv(path, {Objective::Max}, {});
        CHECK(dm.criteria()[0] == "c,1");
        CHECK(dm.alternatives()[0] == "A \"x\"");
    }
}

TEST_CASE("sweep config parsing") {
    SUBCASE("the worked sweep expands to six pipelines") {
        const SweepReport report = sample_report();
        CHECK(report.combinations == 6);
        REQUIRE(report.pipelines.size() == 6);
        CHECK(report.pipelines[0] == "InvertMinimize+SumScaler+WSM");
        CHECK(report.pipelines[1] == "InvertMinimize+SumScaler+TOPSIS");
        CHECK(report.pipelines[5] == "InvertMinimize+MinMaxScaler+TOPSIS");
        CHECK(report.correlation.has_value());
        CHECK(report.notice.empty());
    }
    SUBCASE("unknown kind is rejected by the closed set") {
        CHECK_THROWS_WITH_AS(parse_sweep_config(R"({
            "objectives": ["max"],
            "steps": [{"kind": "ahp"}]
        })"),
                             doctest::Contains("unknown component kind 'ahp'"), Error);
    }
    SUBCASE("descriptor errors carry config location") {
        const fs::path dir = temp_dir();
        write_text(dir / "m.csv", "name,c1\nA,1\nB,2\n");
        SweepConfig config = parse_sweep_config(R"({
            "objectives": ["max"],
            "steps": [[{"kind": "wsm"}, {"kind": "sum_scaler"}]]
        })");
        config.matrix_path = (dir / "m.csv").string();
        CHECK_THROWS_WITH_AS(run_sweep(config, 1), doctest::Contains("final step"), Error);
    }
    SUBCASE("bad objective string") {
        CHECK_THROWS_WITH_AS(parse_sweep_config(R"({
            "objectives": ["maximize"],
            "steps": [{"kind": "topsis"}]
        })"),
                             doctest::Contains("objectives[0]"), Error);
    }
    SUBCASE("invalid JSON") {
        CHECK_THROWS_WITH_AS(parse_sweep_config("{nope"), doctest::Contains("not valid JSON"),
                             Error);
    }
}

TEST_CASE("single-pipeline sweep omits metrics with a notice") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    SweepConfig config = parse_sweep_config(R"({
        "objectives": ["min", "max", "max"],
        "steps": [{"kind": "topsis"}]
    })");
    config.matrix_path = (dir / "m.csv").string();
    const SweepReport report = run_sweep(config, 1);
    CHECK(report.combinations == 1);
    CHECK_FALSE(report.correlation.has_value());
    CHECK(report.notice == "metric matrices omitted: they need at least 2 pipelines");

    // One data column in ranks.csv.
    write_report_csv_dir(report, dir / "out");
    const std::string ranks = read_text(dir / "out" / "ranks.csv");
    CHECK(ranks.starts_with("alternative,TOPSIS\n"));
    CHECK_FALSE(fs::exists(dir / "out" / "corr.csv"));
}

TEST_CASE("JSON report round-trips every numeric field bit-exactly") {
    const SweepReport report = sample_report();
    const auto doc = nlohmann::json::parse(report_json_text(report));

    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
        for (std::size_t j = 0; j < report.pipelines.size(); ++j) {
            CHECK(doc["ranks"][i][j].get<int>() == report.ranks[i][j]);
            CHECK(doc["scores"][i][j].get<double>() == report.scores[i][j]);
        }
    }
    const auto& corr_cells = doc["metrics"]["corr"]["cells"];
    for (std::size_t i = 0; i < report.pipelines.size(); ++i) {
        for (std::size_t j = 0; j < report.pipelines.size(); ++j) {
            CHECK(corr_cells[i][j].get<double>() == report.correlation->at(i, j));
        }
    }
    for (std::size_t i = 0; i < report.alternatives.size(); ++i) {
        CHECK(doc["distribution"][i]["median"].get<double>() ==
              report.rank_distribution.rows[i].median);
    }
    CHECK(doc["metadata"]["combinations"].get<std::size_t>() == report.combinations);
}

TEST_CASE("reports are deterministic modulo the wall-time field") {
    const SweepReport a = sample_report();
    const SweepReport b = sample_report();
    auto doc_a = nlohmann::ordered_json::parse(report_json_text(a));
    auto doc_b = nlohmann::ordered_json::parse(report_json_text(b));
    doc_a["metadata"]["wall_time_ms"] = 0.0;
    doc_b["metadata"]["wall_time_ms"] = 0.0;
    CHECK(doc_a.dump() == doc_b.dump());
}

TEST_CASE("csv-dir emission") {
    const fs::path dir = temp_dir();
    const SweepReport report = sample_report();
    write_report_csv_dir(report, dir / "out");

    for (const char* name :
         {"ranks.csv", "scores.csv", "corr.csv", "cov.csv", "r2.csv", "distance.csv",
          "distribution.csv", "metadata.json"}) {
        CHECK(fs::exists(dir / "out" / name));
    }

    // corr.csv diagonal is exactly 1.
    const std::string corr_text = read_text(dir / "out" / "corr.csv");
    std::istringstream lines(corr_text);
    std::string line;
    std::getline(lines, line);  // header
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        const auto fields = split_csv_line(line);
        CHECK(fields[row + 1] == "1");
        ++row;
    }
    CHECK(row == report.pipelines.size());

    // scores.csv round-trips through 17 significant digits.
    const std::string scores_text = read_text(dir / "out" / "scores.csv");
    std::istringstream score_lines(scores_text);
    std::getline(score_lines, line);
    row = 0;
    while (std::getline(score_lines, line)) {
        const auto fields = split_csv_line(line);
        for (std::size_t j = 0; j < report.pipelines.size(); ++j) {
            CHECK(std::stod(fields[j + 1]) == report.scores[row][j]);
        }
        ++row;
    }
}

TEST_CASE("rendered SVGs are well-formed with the expected element counts") {
    const SweepReport report = sample_report();

    const std::string boxplot = render_boxplot_svg(report);
    CHECK(xml_well_formed(boxplot));
    CHECK(count_occurrences(boxplot, "class=\"box\"") == report.alternatives.size());

    const std::string heatmap = render_heatmap_svg(report);
    CHECK(xml_well_formed(heatmap));
    const std::size_t k = report.pipelines.size();
    CHECK(count_occurrences(heatmap, "class=\"cell\"") == k * k);
    CHECK(count_occurrences(heatmap, "class=\"cell-label\"") == k * k);
    CHECK(count_occurrences(heatmap, ">1.000<") >= k);  // diagonal labels
}

TEST_CASE("degenerate boxplot: constant rank 1 collapses the box at the top") {
    const fs::path dir = temp_dir();
    // B strictly dominates A on every criterion, so B is rank 1 everywhere.
    write_text(dir / "m.csv", "name,c1,c2\nA,1,1\nB,2,2\n");
    SweepConfig config = parse_sweep_config(R"({
        "objectives": ["max", "max"],
        "steps": [
            [{"kind": "sum_scaler"}, {"kind": "vector_scaler"}],
            [{"kind": "wsm"}, {"kind": "topsis"}]
        ]
    })");
    config.matrix_path = (dir / "m.csv").string();
    const SweepReport report = run_sweep(config, 1);
    CHECK(report.rank_distribution.rows[1].min == 1.0);
    CHECK(report.rank_distribution.rows[1].max == 1.0);
    const std::string svg = render_boxplot_svg(report);
    CHECK(xml_well_formed(svg));
    // Degenerate box: zero height.
    CHECK(count_occurrences(svg, "height=\"0.00\"") >= 1);
}

TEST_CASE("heatmap of identical rankings labels everything 1.000") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", "name,c1\nA,1\nB,2\nC,3\n");
    SweepConfig config = parse_sweep_config(R"({
        "objectives": ["max"],
        "steps": [
            [{"kind": "sum_scaler"}, {"kind": "vector_scaler"}],
            [{"kind": "wsm"}]
        ]
    })");
    config.matrix_path = (dir / "m.csv").string();
    const SweepReport report = run_sweep(config, 1);
    REQUIRE(report.pipelines.size() == 2);
    const std::string heatmap = render_heatmap_svg(report);
    CHECK(count_occurrences(heatmap, ">1.000<") == 4);
}

TEST_CASE("heatmap requires at least two pipelines") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", "name,c1\nA,1\nB,2\n");
    SweepConfig config = parse_sweep_config(R"({
        "objectives": ["max"],
        "steps": [{"kind": "wsm"}]
    })");
    config.matrix_path = (dir / "m.csv").string();
    const SweepReport report = run_sweep(config, 1);
    CHECK_THROWS_WITH_AS(render_heatmap_svg(report), doctest::Contains("at least 2"), Error);
}
