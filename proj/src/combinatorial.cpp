#include "rankforge/combinatorial.hpp"

#include <optional>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankforge {

CombinatorialSpec::CombinatorialSpec(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw Error("combinatorial spec has no steps");
    // Occurrence suffixes are allocated spec-wide: every component instance
    // ends up with a distinct name, so "+"-joined pipeline names are unique
    // by construction no matter how alternatives repeat across steps.
    std::set<std::string> used;
    for (std::size_t s = 0; s < steps_.size(); ++s) {
        if (steps_[s].empty()) {
            throw Error("combinatorial spec step " + std::to_string(s) + " is empty");
        }
        const bool last = s + 1 == steps_.size();
        for (auto& c : steps_[s]) {
            if (is_aggregator(c) != last) {
                throw Error(last ? "combinatorial spec: final step must hold only aggregators, "
                                   "found transformer '" + component_name(c) + "'"
                                 : "combinatorial spec: aggregator '" + component_name(c) +
                                   "' found before the final step " + std::to_string(s));
            }
            const std::string display = component_name(c);
            std::string name = display;
            for (int occurrence = 2; !used.insert(name).second; ++occurrence) {
                name = display + "-" + std::to_string(occurrence);
            }
            if (name != display) {
                if (auto* t = std::get_if<Transformer>(&c)) {
                    c = t->renamed(name);
                } else {
                    c = std::get<Aggregator>(c).renamed(name);
                }
            }
        }
    }
}

std::size_t CombinatorialSpec::combination_count() const noexcept {
    std::size_t count = 1;
    for (const auto& step : steps_) count *= step.size();
    return count;
}

std::vector<Pipeline> expand(const CombinatorialSpec& spec) {
    const auto& steps = spec.steps();
    std::vector<Pipeline> pipelines;
    pipelines.reserve(spec.combination_count());

    // Nested iteration with the last step varying fastest: odometer over
    // per-step indices, most significant digit first.
    std::vector<std::size_t> pick(steps.size(), 0);
    while (true) {
        std::vector<Component> components;
        components.reserve(steps.size());
        for (std::size_t s = 0; s < steps.size(); ++s) {
            components.push_back(steps[s][pick[s]]);
        }
        pipelines.push_back(make_pipeline(std::move(components)));

        std::size_t s = steps.size();
        while (s > 0) {
            --s;
            if (++pick[s] < steps[s].size()) break;
            pick[s] = 0;
            if (s == 0) return pipelines;
        }
    }
}

namespace {

RanksComparator assemble(std::vector<std::optional<RankResult>>& slots,
                         const std::vector<Pipeline>& pipelines,
                         std::vector<std::pair<std::string, std::string>>& failures) {
    if (!failures.empty()) {
        std::string message = "evaluation failed for " + std::to_string(failures.size()) +
                              " of " + std::to_string(pipelines.size()) + " pipelines:";
        for (const auto& [name, cause] : failures) {
            message += "\n  " + name + ": " + cause;
        }
        throw EvaluateAllError(std::move(message), std::move(failures));
    }
    std::vector<RankResult> results;
    results.reserve(slots.size());
    for (auto& slot : slots) results.push_back(std::move(*slot));
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].alternatives != results[0].alternatives) {
            throw Error("incomparable rankings: alternative sets differ (pipeline '" +
                        results[i].method + "' vs '" + results[0].method + "')");
        }
    }
    return RanksComparator(std::move(results));
}

}  // namespace

RanksComparator evaluate_all(const CombinatorialSpec& spec, const DecisionMatrix& dm,
                             int jobs) {
    const auto pipelines = expand(spec);
    const auto count = static_cast<std::ptrdiff_t>(pipelines.size());
    std::vector<std::optional<RankResult>> slots(pipelines.size());
    std::vector<std::optional<std::string>> errors(pipelines.size());

#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        // Exceptions must not cross the parallel region; they are collected
        // per slot and aggregated afterwards.
        try {
            slots[i] = pipelines[i].evaluate(dm);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
#else
    (void)jobs;
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            slots[i] = pipelines[i].evaluate(dm);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
#endif

    std::vector<std::pair<std::string, std::string>> failures;
    for (std::size_t i = 0; i < pipelines.size(); ++i) {
        if (errors[i]) failures.emplace_back(pipelines[i].name(), *errors[i]);
    }
    return assemble(slots, pipelines, failures);
}

RanksComparator evaluate_all_serial(const CombinatorialSpec& spec, const DecisionMatrix& dm) {
    const auto pipelines = expand(spec);
    std::vector<std::optional<RankResult>> slots(pipelines.size());
    std::vector<std::pair<std::string, std::string>> failures;
    for (std::size_t i = 0; i < pipelines.size(); ++i) {
        try {
            slots[i] = pipelines[i].evaluate(dm);
        } catch (const std::exception& e) {
            failures.emplace_back(pipelines[i].name(), e.what());
        }
    }
    return assemble(slots, pipelines, failures);
}

}  // namespace rankforge
