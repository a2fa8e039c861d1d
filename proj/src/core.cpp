#include "rankforge/core.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace rankforge {

const char* to_string(Objective o) noexcept {
    return o == Objective::Max ? "max" : "min";
}

namespace {

void check_names_distinct(const std::vector<std::string>& names, const char* field) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) {
            throw Error(std::string(field) + "[" + std::to_string(i) + "] is empty");
        }
        if (!seen.insert(names[i]).second) {
            throw Error(std::string(field) + "[" + std::to_string(i) + "] duplicates name '" +
                        names[i] + "'");
        }
    }
}

std::vector<double> flatten_checked(const std::vector<std::vector<double>>& values,
                                    std::size_t m, std::size_t n,
                                    const std::vector<std::string>& alternatives,
                                    const std::vector<std::string>& criteria) {
    if (values.size() != m) {
        throw Error("values has " + std::to_string(values.size()) + " rows, expected " +
                    std::to_string(m));
    }
    std::vector<double> flat;
    flat.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        if (values[i].size() != n) {
            throw Error("values[" + std::to_string(i) + "] has " +
                        std::to_string(values[i].size()) + " columns, expected " +
                        std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(values[i][j])) {
                throw Error("values[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] is not finite (alternative '" + alternatives[i] +
                            "', criterion '" + criteria[j] + "')");
            }
            flat.push_back(values[i][j]);
        }
    }
    return flat;
}

}  // namespace

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives,
                               std::vector<std::string> criteria,
                               const std::vector<std::vector<double>>& values,
                               std::vector<Objective> objectives,
                               std::vector<double> weights)
    : alternatives_(std::move(alternatives)),
      criteria_(std::move(criteria)),
      objectives_(std::move(objectives)),
      weights_(std::move(weights)) {
    if (alternatives_.empty()) throw Error("matrix has no alternatives");
    if (criteria_.empty()) throw Error("matrix has no criteria");
    check_names_distinct(alternatives_, "alternatives");
    check_names_distinct(criteria_, "criteria");
    if (objectives_.size() != criteria_.size()) {
        throw Error("objectives has length " + std::to_string(objectives_.size()) +
                    ", expected " + std::to_string(criteria_.size()));
    }
    if (weights_.size() != criteria_.size()) {
        throw Error("weights has length " + std::to_string(weights_.size()) + ", expected " +
                    std::to_string(criteria_.size()));
    }
    double weight_sum = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        if (!std::isfinite(weights_[j])) {
            throw Error("weights[" + std::to_string(j) + "] is not finite");
        }
        if (weights_[j] < 0.0) {
            throw Error("weights[" + std::to_string(j) + "] is negative (criterion '" +
                        criteria_[j] + "')");
        }
        weight_sum += weights_[j];
    }
    if (weight_sum == 0.0) throw Error("weights sum to zero");
    values_ = flatten_checked(values, alternatives_.size(), criteria_.size(), alternatives_,
                              criteria_);
}

std::vector<double> DecisionMatrix::column(std::size_t j) const {
    std::vector<double> col(alternative_count());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = value(i, j);
    return col;
}

std::size_t DecisionMatrix::criterion_index(const std::string& name) const {
    for (std::size_t j = 0; j < criteria_.size(); ++j) {
        if (criteria_[j] == name) return j;
    }
    throw Error("unknown criterion '" + name + "'");
}

DecisionMatrix DecisionMatrix::with_values(
    const std::vector<std::vector<double>>& new_values) const {
    return DecisionMatrix(alternatives_, criteria_, new_values, objectives_, weights_);
}

DecisionMatrix DecisionMatrix::select_rows(const std::vector<std::size_t>& rows) const {
    std::vector<std::string> names;
    std::vector<std::vector<double>> grid;
    names.reserve(rows.size());
    grid.reserve(rows.size());
    for (std::size_t i : rows) {
        names.push_back(alternatives_[i]);
        auto r = row(i);
        grid.emplace_back(r.begin(), r.end());
    }
    return DecisionMatrix(std::move(names), criteria_, grid, objectives_, weights_);
}

std::vector<std::vector<double>> DecisionMatrix::values_grid() const {
    std::vector<std::vector<double>> grid;
    grid.reserve(alternative_count());
    for (std::size_t i = 0; i < alternative_count(); ++i) {
        auto r = row(i);
        grid.emplace_back(r.begin(), r.end());
    }
    return grid;
}

DecisionMatrix make_decision_matrix(std::vector<std::string> alternatives,
                                    std::vector<std::string> criteria,
                                    const std::vector<std::vector<double>>& values,
                                    std::vector<Objective> objectives,
                                    std::vector<double> weights) {
    return DecisionMatrix(std::move(alternatives), std::move(criteria), values,
                          std::move(objectives), std::move(weights));
}

DecisionMatrix replace_values(const DecisionMatrix& dm,
                              const std::vector<std::vector<double>>& new_values) {
    return dm.with_values(new_values);
}

}  // namespace rankforge
