#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/pipeline.hpp"
#include "rankforge/rank_analysis.hpp"

namespace rankforge {

/// Step-wise specification of methodological alternatives. Each step holds
/// one or more interchangeable components; the final step holds aggregators
/// and every earlier step holds transformers. Expanding the spec takes the
/// Cartesian product across steps.
class CombinatorialSpec {
public:
    using Step = std::vector<Component>;

    /// Validates placement and disambiguates duplicate display names inside
    /// a step (occurrence suffix), which keeps expanded pipeline names
    /// pairwise distinct. Single-component steps are just one-element lists.
    explicit CombinatorialSpec(std::vector<Step> steps);

    const std::vector<Step>& steps() const noexcept { return steps_; }

    /// Product of per-step alternative counts.
    std::size_t combination_count() const noexcept;

private:
    std::vector<Step> steps_;
};

/// All pipelines of the spec's Cartesian product, enumerated with the last
/// step varying fastest (the first step varies slowest). Names are the
/// "+"-joined component names and are pairwise distinct.
std::vector<Pipeline> expand(const CombinatorialSpec& spec);

/// Carries every failing pipeline with its cause; evaluate_all never
/// fail-fasts, so the report is complete.
class EvaluateAllError : public Error {
public:
    EvaluateAllError(std::string message,
                     std::vector<std::pair<std::string, std::string>> failures)
        : Error(std::move(message)), failures_(std::move(failures)) {}

    const std::vector<std::pair<std::string, std::string>>& failures() const noexcept {
        return failures_;
    }

private:
    std::vector<std::pair<std::string, std::string>> failures_;  // (pipeline, cause)
};

/// Evaluates every expanded pipeline over dm and collects the results into a
/// RanksComparator keyed by pipeline name, in expansion order.
///
/// Pipelines fan out across an OpenMP thread team (jobs <= 0 means all
/// available threads); each evaluation is an independent pure computation
/// whose result lands in its expansion-order slot, so the outcome is
/// bit-identical to the serial path no matter how iterations are scheduled.
/// If any pipeline fails the whole call throws EvaluateAllError listing every
/// failure; if surviving alternative sets differ across pipelines the call
/// throws "incomparable rankings: alternative sets differ".
RanksComparator evaluate_all(const CombinatorialSpec& spec, const DecisionMatrix& dm,
                             int jobs = 0);

/// Serial reference implementation: the plain fold of Pipeline::evaluate over
/// expand(spec). Kept as the comparison baseline for tests and benchmarks;
/// evaluate_all must match it exactly.
RanksComparator evaluate_all_serial(const CombinatorialSpec& spec, const DecisionMatrix& dm);

}  // namespace rankforge
