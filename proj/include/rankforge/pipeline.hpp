#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rankforge/aggregation.hpp"
#include "rankforge/transforms.hpp"

namespace rankforge {

/// One pipeline building block: either a transformer step or the terminal
/// aggregator.
using Component = std::variant<Transformer, Aggregator>;

const std::string& component_name(const Component& c);
bool is_aggregator(const Component& c) noexcept;

/// Ordered transformer steps terminated by exactly one aggregator.
///
/// The name is the "+"-joined list of component display names; when two
/// components in the same pipeline share a display name the later ones get a
/// 1-based occurrence suffix ("MinMaxScaler-2") so every pipeline identifier
/// stays unique.
class Pipeline {
public:
    const std::string& name() const noexcept { return name_; }
    const std::vector<Transformer>& steps() const noexcept { return steps_; }
    const Aggregator& aggregator() const noexcept { return aggregator_; }

    /// Applies the steps left to right and then the aggregator. The result's
    /// method field is the pipeline name; its alternatives are the ones that
    /// survived any filters, in original order. A failing step's error is
    /// rethrown wrapped with the step index and name.
    RankResult evaluate(const DecisionMatrix& dm) const;

private:
    Pipeline(std::string name, std::vector<Transformer> steps, Aggregator aggregator)
        : name_(std::move(name)), steps_(std::move(steps)), aggregator_(std::move(aggregator)) {}

    std::string name_;
    std::vector<Transformer> steps_;
    Aggregator aggregator_;

    friend Pipeline make_pipeline(std::vector<Component> components);
};

/// Builds a pipeline from an ordered component list. The list must be
/// nonempty, end with an aggregator, and contain no other aggregator.
Pipeline make_pipeline(std::vector<Component> components);

}  // namespace rankforge
