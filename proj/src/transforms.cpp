#include "rankforge/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iostream>
#include <ranges>
#include <vector>

namespace rankforge {

const char* to_string(ScaleTarget t) noexcept {
    switch (t) {
        case ScaleTarget::MatrixOnly: return "matrix";
        case ScaleTarget::WeightsOnly: return "weights";
        default: return "both";
    }
}

DecisionMatrix invert_minimize(const DecisionMatrix& dm) {
    auto grid = dm.values_grid();
    auto objectives = dm.objectives();
    for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
        if (objectives[j] != Objective::Min) continue;
        for (std::size_t i = 0; i < dm.alternative_count(); ++i) {
            if (grid[i][j] <= 0.0) {
                throw Error("invert_minimize: criterion '" + dm.criteria()[j] +
                            "' has non-positive value for alternative '" +
                            dm.alternatives()[i] + "'");
            }
            grid[i][j] = 1.0 / grid[i][j];
        }
        objectives[j] = Objective::Max;
    }
    return {dm.alternatives(), dm.criteria(), grid, std::move(objectives), dm.weights()};
}

DecisionMatrix negate_minimize(const DecisionMatrix& dm) {
    auto grid = dm.values_grid();
    auto objectives = dm.objectives();
    for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
        if (objectives[j] != Objective::Min) continue;
        for (std::size_t i = 0; i < dm.alternative_count(); ++i) grid[i][j] = -grid[i][j];
        objectives[j] = Objective::Max;
    }
    return {dm.alternatives(), dm.criteria(), grid, std::move(objectives), dm.weights()};
}

DecisionMatrix filter_gt(const DecisionMatrix& dm,
                         const std::map<std::string, double>& thresholds) {
    std::vector<std::pair<std::size_t, double>> bounds;
    bounds.reserve(thresholds.size());
    for (const auto& [name, threshold] : thresholds) {
        bounds.emplace_back(dm.criterion_index(name), threshold);
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < dm.alternative_count(); ++i) {
        bool pass = true;
        for (const auto& [j, threshold] : bounds) {
            if (!(dm.value(i, j) > threshold)) {
                pass = false;
                break;
            }
        }
        if (pass) keep.push_back(i);
    }
    if (keep.empty()) throw Error("filter_gt: all alternatives filtered");
    if (keep.size() == dm.alternative_count()) return dm;
    return dm.select_rows(keep);
}

namespace {

// b dominates a: at least as good everywhere, strictly better somewhere.
bool dominates(const DecisionMatrix& dm, std::size_t b, std::size_t a) {
    bool strictly_better = false;
    for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
        const double vb = dm.value(b, j);
        const double va = dm.value(a, j);
        const bool maximize = dm.objectives()[j] == Objective::Max;
        const double better = maximize ? vb - va : va - vb;
        if (better < 0.0) return false;
        if (better > 0.0) strictly_better = true;
    }
    return strictly_better;
}

}  // namespace

DecisionMatrix filter_non_dominated(const DecisionMatrix& dm) {
    const std::size_t m = dm.alternative_count();
    std::vector<std::size_t> keep;
    for (std::size_t a = 0; a < m; ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < m && !dominated; ++b) {
            if (b != a && dominates(dm, b, a)) dominated = true;
        }
        if (!dominated) keep.push_back(a);
    }
    if (keep.size() == m) return dm;
    return dm.select_rows(keep);
}

namespace {

using ColumnScale = double (*)(const std::vector<double>&);

DecisionMatrix scale_by(const DecisionMatrix& dm, ScaleTarget target, ColumnScale scale,
                        const char* op_name) {
    auto grid = dm.values_grid();
    auto weights = dm.weights();
    if (target != ScaleTarget::WeightsOnly) {
        for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
            const double denom = scale(dm.column(j));
            if (denom == 0.0) {
                throw Error(std::string(op_name) + ": criterion '" + dm.criteria()[j] +
                            "' has zero scale");
            }
            for (std::size_t i = 0; i < dm.alternative_count(); ++i) grid[i][j] /= denom;
        }
    }
    if (target != ScaleTarget::MatrixOnly) {
        const double denom = scale(weights);
        if (denom == 0.0) throw Error(std::string(op_name) + ": weights have zero scale");
        for (double& w : weights) w /= denom;
    }
    return {dm.alternatives(), dm.criteria(), grid, dm.objectives(), std::move(weights)};
}

double abs_sum(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
}

double euclidean_norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

}  // namespace

DecisionMatrix sum_scaler(const DecisionMatrix& dm, ScaleTarget target) {
    return scale_by(dm, target, &abs_sum, "sum_scaler");
}

DecisionMatrix vector_scaler(const DecisionMatrix& dm, ScaleTarget target) {
    return scale_by(dm, target, &euclidean_norm, "vector_scaler");
}

namespace {

void minmax_in_place(std::vector<double>& x, const std::string& label) {
    double lo = x[0];
    double hi = x[0];
    for (double v : x) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) {
        std::cerr << "warning: minmax_scaler: " << label << " is constant, mapped to zeros\n";
        for (double& v : x) v = 0.0;
        return;
    }
    for (double& v : x) v = (v - lo) / (hi - lo);
}

}  // namespace

DecisionMatrix minmax_scaler(const DecisionMatrix& dm, ScaleTarget target) {
    auto grid = dm.values_grid();
    auto weights = dm.weights();
    if (target != ScaleTarget::WeightsOnly) {
        for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
            auto col = dm.column(j);
            minmax_in_place(col, "criterion '" + dm.criteria()[j] + "'");
            for (std::size_t i = 0; i < dm.alternative_count(); ++i) grid[i][j] = col[i];
        }
    }
    if (target != ScaleTarget::MatrixOnly) {
        // Constant weights would map to all zeros, which no valid matrix can hold.
        if (std::ranges::min(weights) == std::ranges::max(weights)) {
            throw Error("minmax_scaler: weights are constant; min-max scaling would zero them");
        }
        minmax_in_place(weights, "weights");
    }
    return {dm.alternatives(), dm.criteria(), grid, dm.objectives(), std::move(weights)};
}

namespace components {

Transformer invert_minimize() {
    return {"InvertMinimize", [](const DecisionMatrix& dm) { return rankforge::invert_minimize(dm); }};
}

Transformer negate_minimize() {
    return {"NegateMinimize", [](const DecisionMatrix& dm) { return rankforge::negate_minimize(dm); }};
}

Transformer filter_gt(std::map<std::string, double> thresholds) {
    return {"FilterGT", [t = std::move(thresholds)](const DecisionMatrix& dm) {
                return rankforge::filter_gt(dm, t);
            }};
}

Transformer filter_non_dominated() {
    return {"FilterNonDominated",
            [](const DecisionMatrix& dm) { return rankforge::filter_non_dominated(dm); }};
}

Transformer sum_scaler(ScaleTarget target) {
    return {"SumScaler",
            [target](const DecisionMatrix& dm) { return rankforge::sum_scaler(dm, target); }};
}

Transformer vector_scaler(ScaleTarget target) {
    return {"VectorScaler",
            [target](const DecisionMatrix& dm) { return rankforge::vector_scaler(dm, target); }};
}

Transformer minmax_scaler(ScaleTarget target) {
    return {"MinMaxScaler",
            [target](const DecisionMatrix& dm) { return rankforge::minmax_scaler(dm, target); }};
}

}  // namespace components

}  // namespace rankforge
