#include "rankforge/rank_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace rankforge {

RanksComparator::RanksComparator(std::vector<RankResult> results)
    : results_(std::move(results)) {
    if (results_.empty()) throw Error("RanksComparator: no rankings given");
    std::unordered_set<std::string> seen;
    names_.reserve(results_.size());
    alternatives_ = results_.front().alternatives;
    for (const auto& r : results_) {
        if (r.method.empty()) throw Error("RanksComparator: ranking with empty name");
        if (!seen.insert(r.method).second) {
            throw Error("RanksComparator: duplicate ranking name '" + r.method + "'");
        }
        if (r.alternatives != alternatives_) {
            throw Error("RanksComparator: ranking '" + r.method +
                        "' has a different alternative set/order");
        }
        if (r.scores.size() != alternatives_.size() || r.ranks.size() != alternatives_.size()) {
            throw Error("RanksComparator: ranking '" + r.method + "' has inconsistent lengths");
        }
        names_.push_back(r.method);
    }
}

const char* to_string(Metric m) noexcept {
    switch (m) {
        case Metric::Correlation: return "correlation";
        case Metric::Covariance: return "covariance";
        case Metric::R2: return "r2";
        default: return "distance";
    }
}

namespace {

std::vector<std::vector<double>> rank_vectors(const RanksComparator& rc, RankBasis basis) {
    std::vector<std::vector<double>> vecs;
    vecs.reserve(rc.size());
    for (const auto& r : rc.results()) {
        std::vector<double> v;
        if (basis == RankBasis::Untied) {
            auto u = untied_rank(r);
            v.assign(u.begin(), u.end());
        } else {
            v.assign(r.ranks.begin(), r.ranks.end());
        }
        vecs.push_back(std::move(v));
    }
    return vecs;
}

void require_pairable(const RanksComparator& rc, std::size_t min_alternatives,
                      const char* op) {
    if (rc.size() < 2) {
        throw Error(std::string(op) + " needs at least 2 rankings, got " +
                    std::to_string(rc.size()));
    }
    if (rc.alternatives().size() < min_alternatives) {
        throw Error(std::string(op) + " needs at least " + std::to_string(min_alternatives) +
                    " alternatives, got " + std::to_string(rc.alternatives().size()));
    }
}

double mean(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

// Sample covariance, divisor m - 1.
double sample_cov(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = mean(x);
    const double my = mean(y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - mx) * (y[i] - my);
    return s / static_cast<double>(x.size() - 1);
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double cxy = sample_cov(x, y);
    const double sx = std::sqrt(sample_cov(x, x));
    const double sy = std::sqrt(sample_cov(y, y));
    return cxy / (sx * sy);
}

MetricMatrix symmetric_metric(const RanksComparator& rc, RankBasis basis, Metric metric,
                              double diagonal_value, bool diagonal_from_pair,
                              double (*pair)(const std::vector<double>&,
                                             const std::vector<double>&)) {
    const auto vecs = rank_vectors(rc, basis);
    const std::size_t k = vecs.size();
    MetricMatrix out{metric, rc.names(), std::vector<double>(k * k, 0.0)};
    for (std::size_t i = 0; i < k; ++i) {
        out.at(i, i) = diagonal_from_pair ? pair(vecs[i], vecs[i]) : diagonal_value;
        for (std::size_t j = i + 1; j < k; ++j) {
            const double v = pair(vecs[i], vecs[j]);
            out.at(i, j) = v;
            out.at(j, i) = v;
        }
    }
    return out;
}

}  // namespace

MetricMatrix corr(const RanksComparator& rc, RankBasis basis) {
    require_pairable(rc, 2, "corr");
    return symmetric_metric(rc, basis, Metric::Correlation, 1.0, false, &pearson);
}

MetricMatrix cov(const RanksComparator& rc, RankBasis basis) {
    require_pairable(rc, 2, "cov");
    return symmetric_metric(rc, basis, Metric::Covariance, 0.0, true, &sample_cov);
}

MetricMatrix r2_score(const RanksComparator& rc, RankBasis basis) {
    require_pairable(rc, 2, "r2_score");
    const auto vecs = rank_vectors(rc, basis);
    const std::size_t k = vecs.size();
    MetricMatrix out{Metric::R2, rc.names(), std::vector<double>(k * k, 0.0)};
    for (std::size_t i = 0; i < k; ++i) {
        const double truth_mean = mean(vecs[i]);
        double ss_tot = 0.0;
        for (double v : vecs[i]) ss_tot += (v - truth_mean) * (v - truth_mean);
        for (std::size_t j = 0; j < k; ++j) {
            double ss_res = 0.0;
            for (std::size_t a = 0; a < vecs[i].size(); ++a) {
                const double d = vecs[i][a] - vecs[j][a];
                ss_res += d * d;
            }
            out.at(i, j) = 1.0 - ss_res / ss_tot;
        }
    }
    return out;
}

namespace {

double hamming(const std::vector<double>& x, const std::vector<double>& y) {
    std::size_t differ = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) ++differ;
    }
    return static_cast<double>(differ) / static_cast<double>(x.size());
}

}  // namespace

MetricMatrix distance(const RanksComparator& rc, RankBasis basis) {
    require_pairable(rc, 1, "distance");
    return symmetric_metric(rc, basis, Metric::Distance, 0.0, false, &hamming);
}

std::vector<std::vector<int>> rank_table(const RanksComparator& rc) {
    const std::size_t m = rc.alternatives().size();
    const std::size_t k = rc.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        const auto u = untied_rank(rc.at(j));
        for (std::size_t i = 0; i < m; ++i) table[i][j] = u[i];
    }
    return table;
}

namespace {

// Linear interpolation between order statistics: q(p) sits at h = (n-1)p.
double quantile(const std::vector<double>& sorted, double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

RankDistribution distribution(const RanksComparator& rc) {
    const auto table = rank_table(rc);
    RankDistribution dist;
    dist.alternatives = rc.alternatives();
    dist.rows.reserve(table.size());
    for (const auto& row : table) {
        std::vector<double> sorted(row.begin(), row.end());
        std::sort(sorted.begin(), sorted.end());
        dist.rows.push_back({sorted.front(), quantile(sorted, 0.25), quantile(sorted, 0.5),
                             quantile(sorted, 0.75), sorted.back()});
    }
    return dist;
}

}  // namespace rankforge
