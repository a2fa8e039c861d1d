#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/core.hpp"

namespace rankforge {

/// Output of one ranking method over a decision matrix.
///
/// `ranks` are competition ("min") ranks of the scores in descending order:
/// rank_i = 1 + |{j : score_j > score_i}|, so tied alternatives share the
/// smallest rank of their block. 1 is best.
struct RankResult {
    std::string method;
    std::vector<std::string> alternatives;
    std::vector<double> scores;
    std::vector<int> ranks;

    bool operator==(const RankResult&) const = default;
};

/// Competition ranks for a score vector. With higher_is_better false the
/// ranks are those of the negated scores.
std::vector<int> rank_from_scores(std::span<const double> scores, bool higher_is_better);

/// Tie-free permutation of 1..m: untied alternatives keep their tied-rank
/// order and tied groups are broken by ascending original alternative index.
std::vector<int> untied_rank(const RankResult& r);

/// Weighted Sum Model: score_i = sum_j w_j * v_ij over an already scaled
/// all-Max matrix. Rejects Min objectives; apply an inverter first.
RankResult weighted_sum_model(const DecisionMatrix& dm);

/// TOPSIS: weights the matrix, finds the per-criterion ideal/anti-ideal
/// (direction-aware, so mixed objectives are fine), and scores each
/// alternative by relative Euclidean closeness C = d-/(d+ + d-), in [0, 1].
/// When an alternative coincides with both points (all rows identical)
/// C = 0.5, the continuous limit. No normalization happens here; scaling is
/// the pipeline's job.
RankResult topsis(const DecisionMatrix& dm);

/// A named terminal pipeline step producing a RankResult.
class Aggregator {
public:
    Aggregator(std::string name, std::function<RankResult(const DecisionMatrix&)> apply)
        : name_(std::move(name)), apply_(std::move(apply)) {}

    const std::string& name() const noexcept { return name_; }
    RankResult apply(const DecisionMatrix& dm) const { return apply_(dm); }

    Aggregator renamed(std::string name) const { return {std::move(name), apply_}; }

private:
    std::string name_;
    std::function<RankResult(const DecisionMatrix&)> apply_;
};

namespace components {

Aggregator weighted_sum_model();  // display name "WSM"
Aggregator topsis();              // display name "TOPSIS"

}  // namespace components

}  // namespace rankforge
