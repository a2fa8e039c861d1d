// Generates data/case_study.csv: a nine-cryptocurrency decision matrix whose
// InvertMinimize x {SumScaler, VectorScaler, MinMaxScaler} x {WSM, TOPSIS}
// sweep lands on a fixed set of six target rankings (see `kTargets` below).
//
// The reference dataset this mirrors is not redistributable here, so the
// values are synthesized: simulated annealing searches for a positive matrix
// whose six scenario rankings match the targets exactly, which pins the whole
// pairwise correlation structure of the sweep (rankings determine rank
// correlations exactly). Deterministic given --seed; see data/README.md for
// provenance notes.
//
//   make_case_study --out data/case_study.csv [--seed N]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankforge/combinatorial.hpp"
#include "rankforge/csv.hpp"

using namespace rankforge;

namespace {

const std::vector<std::string> kAlternatives = {"ADA", "BNB", "BTC", "DOGE", "ETH",
                                                "LINK", "LTC", "XLM", "XRP"};

// Criterion name, objective, column scale used for presentation.
struct Criterion {
    const char* name;
    Objective objective;
    double scale;
};

const std::vector<Criterion> kCriteria = {
    {"market_cap_busd", Objective::Max, 40.0},
    {"volume_busd", Objective::Max, 2.0},
    {"roi_mean_pct", Objective::Max, 0.05},
    {"liquidity_index", Objective::Max, 0.1},
    {"volatility_pct", Objective::Min, 0.5},
    {"max_drawdown_pct", Objective::Min, 3.0},
    {"spread_pct", Objective::Min, 0.02},
};

// Untied rank targets per scenario, indexed like kAlternatives
// (ADA, BNB, BTC, DOGE, ETH, LINK, LTC, XLM, XRP). Expansion order of the
// case-study spec: Sum+WSM, Sum+TOPSIS, Vec+WSM, Vec+TOPSIS, MM+WSM,
// MM+TOPSIS. Pairwise squared rank distances give the correlation structure:
// identical WSM rankings under Sum/Vec, one adjacent swap between the two
// TOPSIS scalings, and a sum of 18 between MM+WSM and MM+TOPSIS (rho 0.850),
// the sweep's unique minimum.
const std::vector<std::vector<int>> kTargets = {
    {4, 1, 2, 9, 3, 5, 6, 7, 8},  // Sum+WSM
    {4, 1, 2, 9, 3, 5, 6, 7, 8},  // Sum+TOPSIS
    {4, 1, 2, 9, 3, 5, 6, 7, 8},  // Vec+WSM
    {4, 1, 2, 9, 3, 6, 5, 7, 8},  // Vec+TOPSIS: LINK/LTC swapped
    {3, 1, 2, 9, 4, 5, 6, 7, 8},  // MM+WSM: ADA/ETH swapped
    {6, 1, 2, 9, 4, 5, 3, 7, 8},  // MM+TOPSIS: mid-block rearranged
};

CombinatorialSpec case_study_spec() {
    std::vector<CombinatorialSpec::Step> steps;
    steps.push_back({components::invert_minimize()});
    steps.push_back({components::sum_scaler(), components::vector_scaler(),
                     components::minmax_scaler()});
    steps.push_back({components::weighted_sum_model(), components::topsis()});
    return CombinatorialSpec(std::move(steps));
}

DecisionMatrix matrix_from(const std::vector<double>& cells) {
    std::vector<std::string> criteria;
    std::vector<Objective> objectives;
    for (const auto& c : kCriteria) {
        criteria.emplace_back(c.name);
        objectives.push_back(c.objective);
    }
    const std::size_t m = kAlternatives.size();
    const std::size_t n = kCriteria.size();
    std::vector<std::vector<double>> grid(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) grid[i][j] = cells[i * n + j];
    }
    return {kAlternatives, criteria, grid, objectives,
            std::vector<double>(n, 1.0)};
}

// Hinge loss over adjacent pairs of each scenario's target order, plus a
// large penalty per hard order violation. Zero means every scenario ranks
// exactly as targeted with a comfortable score margin.
double ranking_loss(const std::vector<Pipeline>& pipelines, const std::vector<double>& cells) {
    double loss = 0.0;
    DecisionMatrix dm = matrix_from(cells);
    for (std::size_t s = 0; s < pipelines.size(); ++s) {
        RankResult result;
        try {
            result = pipelines[s].evaluate(dm);
        } catch (const std::exception&) {
            return 1e18;
        }
        const auto& target = kTargets[s];
        std::vector<std::size_t> order(target.size());
        for (std::size_t i = 0; i < target.size(); ++i) {
            order[static_cast<std::size_t>(target[i]) - 1] = i;
        }
        double lo = result.scores[0], hi = result.scores[0];
        for (double v : result.scores) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double margin = 0.004 * std::max(hi - lo, 1e-12);
        for (std::size_t r = 0; r + 1 < order.size(); ++r) {
            const double gap = result.scores[order[r]] - result.scores[order[r + 1]];
            if (gap < margin) {
                const double miss = margin - gap;
                loss += miss * miss / (margin * margin);
                if (gap <= 0.0) loss += 100.0;
            }
        }
    }
    return loss;
}

bool targets_hit(const std::vector<Pipeline>& pipelines, const DecisionMatrix& dm) {
    for (std::size_t s = 0; s < pipelines.size(); ++s) {
        if (untied_rank(pipelines[s].evaluate(dm)) != kTargets[s]) return false;
    }
    return true;
}

// Base profile: column monotone in the Sum+WSM target order so the search
// starts from a matrix where every scenario already agrees.
std::vector<double> initial_cells(std::mt19937& rng) {
    std::uniform_real_distribution<double> jitter(0.85, 1.15);
    const auto& base_rank = kTargets[0];
    std::vector<double> cells(kAlternatives.size() * kCriteria.size());
    for (std::size_t i = 0; i < kAlternatives.size(); ++i) {
        const double quality = 10.0 - static_cast<double>(base_rank[i]);  // 1..9
        for (std::size_t j = 0; j < kCriteria.size(); ++j) {
            const bool maximize = kCriteria[j].objective == Objective::Max;
            const double ideal = maximize ? (0.5 + quality) : 1.0 / (0.5 + quality) * 8.0;
            cells[i * kCriteria.size() + j] = ideal * jitter(rng);
        }
    }
    return cells;
}

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_path = "data/case_study.csv";
    unsigned seed = 7;
    int restarts = 64;
    int iterations = 400000;

    CLI::App app{"case-study dataset generator"};
    app.add_option("--out", out_path, "Output CSV path");
    app.add_option("--seed", seed, "Search seed");
    app.add_option("--restarts", restarts, "Annealing restarts");
    app.add_option("--iterations", iterations, "Iterations per restart");
    CLI11_PARSE(app, argc, argv);

    const auto pipelines = expand(case_study_spec());
    if (pipelines.size() != kTargets.size()) {
        std::fprintf(stderr, "scenario count mismatch\n");
        return 1;
    }

    std::vector<double> solution;
    for (int restart = 0; restart < restarts && solution.empty(); ++restart) {
        std::mt19937 rng(seed + 1000003u * static_cast<unsigned>(restart));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_int_distribution<std::size_t> pick_cell(
            0, kAlternatives.size() * kCriteria.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_col(0, kCriteria.size() - 1);

        std::vector<double> cells = initial_cells(rng);
        double loss = ranking_loss(pipelines, cells);
        double temperature = 2.0;

        for (int it = 0; it < iterations && loss > 0.0; ++it) {
            std::vector<double> proposal = cells;
            const double roll = unit(rng);
            const double step = 0.02 + 0.38 * unit(rng);
            if (roll < 0.75) {
                // Multiplicative jitter of one cell.
                const std::size_t c = pick_cell(rng);
                proposal[c] = std::clamp(proposal[c] * std::exp(gauss(rng) * step), 0.05, 60.0);
            } else {
                // Column-wide baseline shift: the lever that separates
                // min-max (offset-sensitive) from sum/vector scaling.
                const std::size_t j = pick_col(rng);
                const double shift = gauss(rng) * step * 3.0;
                for (std::size_t i = 0; i < kAlternatives.size(); ++i) {
                    double& v = proposal[i * kCriteria.size() + j];
                    v = std::clamp(v + shift, 0.05, 60.0);
                }
            }
            const double proposal_loss = ranking_loss(pipelines, proposal);
            if (proposal_loss <= loss ||
                unit(rng) < std::exp((loss - proposal_loss) / temperature)) {
                cells = std::move(proposal);
                loss = proposal_loss;
            }
            temperature = std::max(1e-4, temperature * 0.99995);
        }

        if (loss == 0.0 && targets_hit(pipelines, matrix_from(cells))) {
            solution = cells;
            std::fprintf(stderr, "solved at restart %d\n", restart);
        } else {
            std::fprintf(stderr, "restart %d: residual loss %.6f\n", restart, loss);
        }
    }

    if (solution.empty()) {
        std::fprintf(stderr, "no matrix found; increase --restarts/--iterations\n");
        return 1;
    }

    // Presentation pass: per-column scale to plausible magnitudes, then round.
    // Scalers and the inverter are invariant under positive column rescaling,
    // so only rounding can perturb the result; verify and widen digits if so.
    const std::size_t n = kCriteria.size();
    for (int digits = 6; digits <= 12; ++digits) {
        std::vector<double> scaled(solution.size());
        for (std::size_t i = 0; i < kAlternatives.size(); ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double v = solution[i * n + j] * kCriteria[j].scale;
                scaled[i * n + j] = std::stod(format_sig(v, digits));
            }
        }
        if (!targets_hit(pipelines, matrix_from(scaled))) continue;

        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", out_path.c_str());
            return 1;
        }
        out << "alternative";
        for (const auto& c : kCriteria) out << ',' << c.name;
        out << '\n';
        for (std::size_t i = 0; i < kAlternatives.size(); ++i) {
            out << kAlternatives[i];
            for (std::size_t j = 0; j < n; ++j) {
                out << ',' << format_sig(scaled[i * n + j], digits);
            }
            out << '\n';
        }
        std::printf("wrote %s (%d significant digits)\n", out_path.c_str(), digits);

        // Echo the correlation matrix so docs can quote it.
        const auto comparator = evaluate_all_serial(case_study_spec(), matrix_from(scaled));
        const auto c = corr(comparator);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::printf("%-32s", c.labels[i].c_str());
            for (std::size_t j = 0; j < c.size(); ++j) std::printf(" %6.3f", c.at(i, j));
            std::printf("\n");
        }
        return 0;
    }

    std::fprintf(stderr, "rounding destroyed the solution even at 12 digits\n");
    return 1;
}
