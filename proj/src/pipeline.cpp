#include "rankforge/pipeline.hpp"

#include <map>

namespace rankforge {

const std::string& component_name(const Component& c) {
    return std::visit([](const auto& part) -> const std::string& { return part.name(); }, c);
}

bool is_aggregator(const Component& c) noexcept {
    return std::holds_alternative<Aggregator>(c);
}

Pipeline make_pipeline(std::vector<Component> components) {
    if (components.empty()) throw Error("make_pipeline: component list is empty");
    for (std::size_t i = 0; i + 1 < components.size(); ++i) {
        if (is_aggregator(components[i])) {
            throw Error("make_pipeline: aggregator '" + component_name(components[i]) +
                        "' must be last (found at position " + std::to_string(i) + ")");
        }
    }
    if (!is_aggregator(components.back())) {
        throw Error("make_pipeline: last component '" + component_name(components.back()) +
                    "' is not an aggregator");
    }

    std::map<std::string, int> occurrences;
    std::string name;
    std::vector<Transformer> steps;
    steps.reserve(components.size() - 1);
    Aggregator aggregator = std::get<Aggregator>(std::move(components.back()));
    components.pop_back();

    auto unique_name = [&occurrences](const std::string& display) {
        const int count = ++occurrences[display];
        return count == 1 ? display : display + "-" + std::to_string(count);
    };

    for (auto& c : components) {
        auto step = std::get<Transformer>(std::move(c));
        std::string step_name = unique_name(step.name());
        if (step_name != step.name()) step = step.renamed(step_name);
        name += step.name();
        name += '+';
        steps.push_back(std::move(step));
    }
    std::string agg_name = unique_name(aggregator.name());
    if (agg_name != aggregator.name()) aggregator = aggregator.renamed(agg_name);
    name += aggregator.name();

    return Pipeline(std::move(name), std::move(steps), std::move(aggregator));
}

RankResult Pipeline::evaluate(const DecisionMatrix& dm) const {
    DecisionMatrix current = dm;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        try {
            current = steps_[i].apply(current);
        } catch (const std::exception& e) {
            throw Error("step " + std::to_string(i) + " (" + steps_[i].name() +
                        "): " + e.what());
        }
    }
    RankResult result;
    try {
        result = aggregator_.apply(current);
    } catch (const std::exception& e) {
        throw Error("aggregator (" + aggregator_.name() + "): " + std::string(e.what()));
    }
    result.method = name_;
    return result;
}

}  // namespace rankforge
