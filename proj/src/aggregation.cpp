#include "rankforge/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rankforge {

std::vector<int> rank_from_scores(std::span<const double> scores, bool higher_is_better) {
    if (scores.empty()) throw Error("rank_from_scores: empty score list");
    for (double s : scores) {
        if (!std::isfinite(s)) throw Error("rank_from_scores: non-finite score");
    }
    std::vector<int> ranks(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int ahead = 0;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            const bool better =
                higher_is_better ? scores[j] > scores[i] : scores[j] < scores[i];
            if (better) ++ahead;
        }
        ranks[i] = 1 + ahead;
    }
    return ranks;
}

std::vector<int> untied_rank(const RankResult& r) {
    const std::size_t m = r.ranks.size();
    // Stable sort of alternative indices by tied rank keeps the original
    // order inside each tied group.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return r.ranks[a] < r.ranks[b]; });
    std::vector<int> untied(m);
    for (std::size_t pos = 0; pos < m; ++pos) {
        untied[order[pos]] = static_cast<int>(pos) + 1;
    }
    return untied;
}

RankResult weighted_sum_model(const DecisionMatrix& dm) {
    for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
        if (dm.objectives()[j] == Objective::Min) {
            throw Error("WSM requires all objectives to be Max, but criterion '" +
                        dm.criteria()[j] + "' is Min; apply an inverter first");
        }
    }
    std::vector<double> scores(dm.alternative_count(), 0.0);
    for (std::size_t i = 0; i < dm.alternative_count(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < dm.criterion_count(); ++j) {
            s += dm.weights()[j] * dm.value(i, j);
        }
        scores[i] = s;
    }
    auto ranks = rank_from_scores(scores, true);
    return {"WSM", dm.alternatives(), std::move(scores), std::move(ranks)};
}

RankResult topsis(const DecisionMatrix& dm) {
    const std::size_t m = dm.alternative_count();
    const std::size_t n = dm.criterion_count();

    std::vector<double> ideal(n);
    std::vector<double> anti(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = dm.weights()[j] * dm.value(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < m; ++i) {
            const double u = dm.weights()[j] * dm.value(i, j);
            lo = std::min(lo, u);
            hi = std::max(hi, u);
        }
        const bool maximize = dm.objectives()[j] == Objective::Max;
        ideal[j] = maximize ? hi : lo;
        anti[j] = maximize ? lo : hi;
    }

    std::vector<double> scores(m);
    for (std::size_t i = 0; i < m; ++i) {
        double d_ideal = 0.0;
        double d_anti = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double u = dm.weights()[j] * dm.value(i, j);
            d_ideal += (u - ideal[j]) * (u - ideal[j]);
            d_anti += (u - anti[j]) * (u - anti[j]);
        }
        d_ideal = std::sqrt(d_ideal);
        d_anti = std::sqrt(d_anti);
        scores[i] = (d_ideal + d_anti == 0.0) ? 0.5 : d_anti / (d_ideal + d_anti);
    }
    auto ranks = rank_from_scores(scores, true);
    return {"TOPSIS", dm.alternatives(), std::move(scores), std::move(ranks)};
}

namespace components {

Aggregator weighted_sum_model() {
    return {"WSM", [](const DecisionMatrix& dm) { return rankforge::weighted_sum_model(dm); }};
}

Aggregator topsis() {
    return {"TOPSIS", [](const DecisionMatrix& dm) { return rankforge::topsis(dm); }};
}

}  // namespace components

}  // namespace rankforge
