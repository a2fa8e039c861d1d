#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankforge {

/// Base class for every error raised by the library. Messages are single
/// sentences naming the offending field/index so the CLI can forward them
/// verbatim.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optimization direction of one criterion.
enum class Objective { Max, Min };

const char* to_string(Objective o) noexcept;

/// Alternatives x criteria value grid with per-criterion objective and weight.
///
/// Immutable after construction; every invariant (rectangular shape, finite
/// entries, distinct names, usable weights) is enforced by the constructor,
/// so holding a DecisionMatrix is proof of validity. Transformers produce new
/// matrices instead of mutating (value semantics), and row order is
/// significant: it drives tie-breaking in untied rankings downstream.
class DecisionMatrix {
public:
    DecisionMatrix(std::vector<std::string> alternatives,
                   std::vector<std::string> criteria,
                   const std::vector<std::vector<double>>& values,
                   std::vector<Objective> objectives,
                   std::vector<double> weights);

    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    std::size_t criterion_count() const noexcept { return criteria_.size(); }

    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
    const std::vector<std::string>& criteria() const noexcept { return criteria_; }
    const std::vector<Objective>& objectives() const noexcept { return objectives_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    double value(std::size_t row, std::size_t col) const {
        return values_[row * criteria_.size() + col];
    }
    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * criteria_.size(), criteria_.size()};
    }
    std::vector<double> column(std::size_t j) const;

    /// Index of a criterion by name; throws if absent.
    std::size_t criterion_index(const std::string& name) const;

    /// New matrix with the same names/objectives/weights and replaced values.
    DecisionMatrix with_values(const std::vector<std::vector<double>>& new_values) const;

    /// New matrix keeping only the given rows, in the given order.
    DecisionMatrix select_rows(const std::vector<std::size_t>& rows) const;

    /// Row-major grid copy, one inner vector per alternative.
    std::vector<std::vector<double>> values_grid() const;

    bool operator==(const DecisionMatrix&) const = default;

private:
    std::vector<std::string> alternatives_;
    std::vector<std::string> criteria_;
    std::vector<double> values_;  // row-major, m x n
    std::vector<Objective> objectives_;
    std::vector<double> weights_;
};

/// Validated construction; identical to the DecisionMatrix constructor,
/// provided as a free function for symmetry with replace_values.
DecisionMatrix make_decision_matrix(std::vector<std::string> alternatives,
                                    std::vector<std::string> criteria,
                                    const std::vector<std::vector<double>>& values,
                                    std::vector<Objective> objectives,
                                    std::vector<double> weights);

/// New matrix sharing names/objectives/weights with dm, values replaced.
DecisionMatrix replace_values(const DecisionMatrix& dm,
                              const std::vector<std::vector<double>>& new_values);

}  // namespace rankforge
