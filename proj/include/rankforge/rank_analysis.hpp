#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rankforge/aggregation.hpp"

namespace rankforge {

/// Named collection of rankings over one common, identically ordered set of
/// alternatives; the source of every pairwise metric matrix. Entry names are
/// the RankResult method fields and must be pairwise distinct.
class RanksComparator {
public:
    explicit RanksComparator(std::vector<RankResult> results);

    std::size_t size() const noexcept { return results_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
    const std::vector<RankResult>& results() const noexcept { return results_; }
    const RankResult& at(std::size_t i) const { return results_.at(i); }

private:
    std::vector<RankResult> results_;
    std::vector<std::string> names_;
    std::vector<std::string> alternatives_;
};

enum class Metric { Correlation, Covariance, R2, Distance };

const char* to_string(Metric m) noexcept;

/// k x k grid of one pairwise metric over the comparator's rankings.
/// Correlation/covariance/distance are symmetric; R2 is row = truth,
/// column = prediction and need not be.
struct MetricMatrix {
    Metric metric;
    std::vector<std::string> labels;
    std::vector<double> cells;  // row-major k x k

    std::size_t size() const noexcept { return labels.size(); }
    double at(std::size_t i, std::size_t j) const { return cells[i * labels.size() + j]; }
    double& at(std::size_t i, std::size_t j) { return cells[i * labels.size() + j]; }
};

/// Which rank vectors the metrics consume. Untied (the default) compares the
/// tie-broken permutations, so Pearson there coincides with Spearman's rho;
/// Tied compares raw competition ranks and exists for diagnostics.
enum class RankBasis { Untied, Tied };

/// Pairwise Pearson correlation of rankings. Needs k >= 2 rankings over
/// m >= 2 alternatives.
MetricMatrix corr(const RanksComparator& rc, RankBasis basis = RankBasis::Untied);

/// Pairwise sample covariance (divisor m - 1) of rankings.
MetricMatrix cov(const RanksComparator& rc, RankBasis basis = RankBasis::Untied);

/// Coefficient of determination with ranking i as ground truth and ranking j
/// as prediction: cell (i, j) = 1 - SS_res / SS_tot.
MetricMatrix r2_score(const RanksComparator& rc, RankBasis basis = RankBasis::Untied);

/// Normalized Hamming distance: fraction of alternatives whose rank differs,
/// in [0, 1]. Needs k >= 2; a single alternative is allowed.
MetricMatrix distance(const RanksComparator& rc, RankBasis basis = RankBasis::Untied);

/// Untied ranks as a table: rows follow the alternative order, columns the
/// entry order.
std::vector<std::vector<int>> rank_table(const RanksComparator& rc);

/// Five-number summary of each alternative's untied ranks across entries.
/// Quartiles interpolate linearly between order statistics.
struct RankDistribution {
    struct Summary {
        double min, q1, median, q3, max;
    };
    std::vector<std::string> alternatives;
    std::vector<Summary> rows;
};

RankDistribution distribution(const RanksComparator& rc);

}  // namespace rankforge
