// Process-level checks of the installed CLI: exit codes, single-line errors,
// and output files.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static std::mt19937 rng(std::random_device{}());
    fs::path dir = fs::temp_directory_path() / ("rankforge_cli_" + std::to_string(rng()));
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_cli(const std::string& args, const fs::path& dir) {
    const std::string command = std::string(RANKFORGE_CLI_PATH) + " " + args + " >" +
                                (dir / "stdout.txt").string() + " 2>" +
                                (dir / "stderr.txt").string();
    const int status = std::system(command.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

const char* kMatrixCsv = "name,cost,value\nA,2,10\nB,5,14\nC,3,6\n";

const char* kSweepJson = R"({
  "objectives": ["min", "max"],
  "steps": [
    {"kind": "invert_minimize"},
    [{"kind": "sum_scaler"}, {"kind": "minmax_scaler"}],
    [{"kind": "wsm"}, {"kind": "topsis"}]
  ]
})";

}  // namespace

TEST_CASE("sweep subcommand writes a JSON report and SVGs, exit 0") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    write_text(dir / "sweep.json", kSweepJson);

    const int status = run_cli("sweep --config " + (dir / "sweep.json").string() +
                                   " --matrix " + (dir / "m.csv").string() + " --out " +
                                   (dir / "report.json").string() +
                                   " --svg boxplot --svg heatmap --jobs 2",
                               dir);
    CHECK(status == 0);
    REQUIRE(fs::exists(dir / "report.json"));
    CHECK(fs::exists(dir / "report.boxplot.svg"));
    CHECK(fs::exists(dir / "report.heatmap.svg"));

    const auto doc = ordered_json::parse(read_text(dir / "report.json"));
    CHECK(doc["metadata"]["combinations"].get<int>() == 4);
    CHECK(doc["pipelines"].size() == 4);
}

TEST_CASE("csv format writes one file per table into --out directory") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    write_text(dir / "sweep.json", kSweepJson);

    const int status = run_cli("sweep --config " + (dir / "sweep.json").string() +
                                   " --matrix " + (dir / "m.csv").string() +
                                   " --format csv --out " + (dir / "tables").string(),
                               dir);
    CHECK(status == 0);
    for (const char* name : {"ranks.csv", "scores.csv", "corr.csv", "distribution.csv"}) {
        CHECK(fs::exists(dir / "tables" / name));
    }
}

TEST_CASE("evaluate subcommand runs a single pipeline") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    write_text(dir / "one.json", R"({
        "objectives": ["min", "max"],
        "steps": [{"kind": "invert_minimize"}, {"kind": "sum_scaler"}, {"kind": "topsis"}]
    })");

    const int status = run_cli("evaluate --config " + (dir / "one.json").string() +
                                   " --matrix " + (dir / "m.csv").string() + " --out " +
                                   (dir / "single.json").string(),
                               dir);
    CHECK(status == 0);
    const auto doc = ordered_json::parse(read_text(dir / "single.json"));
    CHECK(doc["pipelines"].size() == 1);
    CHECK(doc["pipelines"][0] == "InvertMinimize+SumScaler+TOPSIS");
}

TEST_CASE("evaluate refuses alternative lists") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    write_text(dir / "sweep.json", kSweepJson);
    const int status = run_cli("evaluate --config " + (dir / "sweep.json").string() +
                                   " --matrix " + (dir / "m.csv").string(),
                               dir);
    CHECK(status != 0);
    const std::string err = read_text(dir / "stderr.txt");
    CHECK(err.find("use the sweep subcommand") != std::string::npos);
}

TEST_CASE("failures exit nonzero with a single-line error") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    write_text(dir / "bad.json", R"({
        "objectives": ["min", "max"],
        "steps": [{"kind": "ahp"}]
    })");

    const int status = run_cli("sweep --config " + (dir / "bad.json").string() + " --matrix " +
                                   (dir / "m.csv").string(),
                               dir);
    CHECK(status == 1);
    const std::string err = read_text(dir / "stderr.txt");
    CHECK(err.starts_with("error: "));
    CHECK(err.find("unknown component kind 'ahp'") != std::string::npos);
    // Single line: exactly one newline, at the end.
    CHECK(std::count(err.begin(), err.end(), '\n') == 1);
    CHECK(err.back() == '\n');
}

TEST_CASE("missing matrix file is a clean failure") {
    const fs::path dir = temp_dir();
    write_text(dir / "sweep.json", kSweepJson);
    const int status = run_cli("sweep --config " + (dir / "sweep.json").string() +
                                   " --matrix " + (dir / "absent.csv").string(),
                               dir);
    CHECK(status == 1);
    CHECK(read_text(dir / "stderr.txt").find("cannot open") != std::string::npos);
}

TEST_CASE("RANKFORGE_JOBS env var is honored as the --jobs fallback") {
    const fs::path dir = temp_dir();
    write_text(dir / "m.csv", kMatrixCsv);
    write_text(dir / "sweep.json", kSweepJson);

    const std::string command = "RANKFORGE_JOBS=3 " + std::string(RANKFORGE_CLI_PATH) +
                                " sweep --config " + (dir / "sweep.json").string() +
                                " --matrix " + (dir / "m.csv").string() + " --out " +
                                (dir / "env.json").string() + " >/dev/null 2>&1";
    REQUIRE(std::system(command.c_str()) == 0);
    const auto doc = ordered_json::parse(read_text(dir / "env.json"));
    CHECK(doc["metadata"]["jobs"].get<int>() == 3);
}
