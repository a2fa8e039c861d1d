#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "rankforge/core.hpp"

namespace rankforge {

/// What a scaler normalizes: the value grid, the weight vector, or both.
enum class ScaleTarget { MatrixOnly, WeightsOnly, Both };

const char* to_string(ScaleTarget t) noexcept;

// Pre-aggregation operations. All are pure maps DecisionMatrix -> DecisionMatrix;
// the input is never mutated and the output satisfies every matrix invariant.

/// Replaces each Min column by its elementwise reciprocal and flips the
/// objective to Max. Requires strictly positive values in Min columns.
DecisionMatrix invert_minimize(const DecisionMatrix& dm);

/// Replaces each Min column by its elementwise negation and flips the
/// objective to Max.
DecisionMatrix negate_minimize(const DecisionMatrix& dm);

/// Keeps the alternatives whose value is strictly greater than the threshold
/// for every listed criterion. Row order is preserved. Erroring when nothing
/// survives keeps a silent empty matrix out of downstream aggregators.
DecisionMatrix filter_gt(const DecisionMatrix& dm,
                         const std::map<std::string, double>& thresholds);

/// Removes every alternative that is strictly Pareto-dominated by another,
/// respecting each criterion's objective direction. Duplicate rows never
/// dominate each other, so at least one alternative always survives.
DecisionMatrix filter_non_dominated(const DecisionMatrix& dm);

/// Column x -> x / sum(|x|); weights w -> w / sum(w) when targeted.
DecisionMatrix sum_scaler(const DecisionMatrix& dm, ScaleTarget target);

/// Column x -> x / ||x||_2; weights likewise when targeted.
DecisionMatrix vector_scaler(const DecisionMatrix& dm, ScaleTarget target);

/// Column x -> (x - min x) / (max x - min x). A constant column maps to all
/// zeros (a one-line diagnostic is printed to stderr) so combinatorial sweeps
/// keep running when one combination hits a degenerate column.
DecisionMatrix minmax_scaler(const DecisionMatrix& dm, ScaleTarget target);

/// A named, deterministic, side-effect-free matrix-to-matrix step.
class Transformer {
public:
    Transformer(std::string name, std::function<DecisionMatrix(const DecisionMatrix&)> apply)
        : name_(std::move(name)), apply_(std::move(apply)) {}

    const std::string& name() const noexcept { return name_; }
    DecisionMatrix apply(const DecisionMatrix& dm) const { return apply_(dm); }

    /// Copy with a different display name (used for collision suffixes).
    Transformer renamed(std::string name) const { return {std::move(name), apply_}; }

private:
    std::string name_;
    std::function<DecisionMatrix(const DecisionMatrix&)> apply_;
};

// Pipeline-ready components wrapping the operations above under their
// canonical display names.
namespace components {

Transformer invert_minimize();
Transformer negate_minimize();
Transformer filter_gt(std::map<std::string, double> thresholds);
Transformer filter_non_dominated();
Transformer sum_scaler(ScaleTarget target = ScaleTarget::MatrixOnly);
Transformer vector_scaler(ScaleTarget target = ScaleTarget::MatrixOnly);
Transformer minmax_scaler(ScaleTarget target = ScaleTarget::MatrixOnly);

}  // namespace components

}  // namespace rankforge
