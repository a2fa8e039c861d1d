// Benchmark: OpenMP-parallel evaluate_all versus the serial reference fold,
// on synthetic sweeps of configurable size. Verifies that both paths return
// identical results before reporting any timing.
//
//   rankforge_bench [--rows N] [--cols N] [--repeats N] [--jobs N]

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "rankforge/combinatorial.hpp"

using namespace rankforge;

namespace {

DecisionMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> value(0.1, 10.0);
    std::uniform_real_distribution<double> weight(0.2, 1.8);
    std::vector<std::string> alternatives(rows);
    std::vector<std::string> criteria(cols);
    for (std::size_t i = 0; i < rows; ++i) alternatives[i] = "A" + std::to_string(i);
    for (std::size_t j = 0; j < cols; ++j) criteria[j] = "c" + std::to_string(j);
    std::vector<std::vector<double>> values(rows, std::vector<double>(cols));
    std::vector<Objective> objectives(cols);
    std::vector<double> weights(cols);
    for (std::size_t j = 0; j < cols; ++j) objectives[j] = j % 3 == 0 ? Objective::Min : Objective::Max;
    for (double& w : weights) w = weight(rng);
    for (auto& row : values) {
        for (double& v : row) v = value(rng);
    }
    return {alternatives, criteria, values, objectives, weights};
}

// 2 x 3 x 3 x 2 = 36 combinations per sweep. Only scalers vary mid-pipeline
// so every branch keeps the full alternative set comparable.
CombinatorialSpec bench_spec() {
    using Step = CombinatorialSpec::Step;
    std::vector<Step> steps;
    steps.push_back({components::invert_minimize(), components::negate_minimize()});
    steps.push_back({components::sum_scaler(), components::vector_scaler(),
                     components::minmax_scaler()});
    steps.push_back({components::sum_scaler(ScaleTarget::WeightsOnly),
                     components::vector_scaler(ScaleTarget::WeightsOnly),
                     components::minmax_scaler(ScaleTarget::WeightsOnly)});
    steps.push_back({components::weighted_sum_model(), components::topsis()});
    return CombinatorialSpec(std::move(steps));
}

bool same_results(const RanksComparator& a, const RanksComparator& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.at(i) == b.at(i))) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t rows = 400;
    std::size_t cols = 8;
    int repeats = 20;
    int jobs = 0;

    CLI::App app{"evaluate_all benchmark: parallel vs serial reference"};
    app.add_option("--rows", rows, "Alternatives in the synthetic matrix");
    app.add_option("--cols", cols, "Criteria in the synthetic matrix");
    app.add_option("--repeats", repeats, "Sweep repetitions per timing");
    app.add_option("--jobs", jobs, "Thread count for the parallel path (0 = all)");
    CLI11_PARSE(app, argc, argv);

    const DecisionMatrix dm = random_matrix(rows, cols, 20240717);
    const CombinatorialSpec spec = bench_spec();

    const RanksComparator serial = evaluate_all_serial(spec, dm);
    const RanksComparator parallel = evaluate_all(spec, dm, jobs);
    if (!same_results(serial, parallel)) {
        std::fprintf(stderr, "parallel and serial results differ; benchmark aborted\n");
        return 1;
    }

    auto time_ms = [&](auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        for (int r = 0; r < repeats; ++r) fn();
        const auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(stop - start).count() /
               static_cast<double>(repeats);
    };

    const double t_serial = time_ms([&] { evaluate_all_serial(spec, dm); });
    const double t_parallel = time_ms([&] { evaluate_all(spec, dm, jobs); });

    std::printf("matrix %zux%zu, %zu pipelines, %d repeats\n", rows, cols,
                spec.combination_count(), repeats);
    std::printf("serial reference : %9.3f ms/sweep\n", t_serial);
    std::printf("parallel         : %9.3f ms/sweep (jobs=%d)\n", t_parallel, jobs);
    std::printf("speedup          : %9.2fx\n", t_serial / t_parallel);
    std::printf("results identical: yes\n");
    return 0;
}
