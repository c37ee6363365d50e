#include "evtail/regression.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "evtail/errors.hpp"

namespace evtail {

void Dataset::validate() const {
    const auto n = response.size();
    if (design.rows() != n) {
        throw DataError("design and response row counts differ");
    }
    if (n <= design.cols()) {
        throw DataError("need more observations than regressors");
    }
    if (!groups.empty() && static_cast<Eigen::Index>(groups.size()) != n) {
        throw DataError("group labels must cover every row");
    }
    if (!response.allFinite() || !design.allFinite()) {
        throw DataError("dataset contains non-finite values");
    }
}

RegressionFit ols_fit(const Dataset& data) {
    data.validate();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(data.design,
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-10 * sv(0)) {
        throw RankDeficient("design matrix is numerically rank deficient (relative sigma_min " +
                            std::to_string(sv(sv.size() - 1) / sv(0)) + ")");
    }
    RegressionFit fit;
    fit.beta = svd.solve(data.response);
    fit.residuals = data.response - data.design * fit.beta;
    fit.condition = sv(0) / sv(sv.size() - 1);
    return fit;
}

ResidualTails extract_tails(std::span<const double> residuals, Orientation orientation,
                            int k) {
    const auto n = residuals.size();
    if (k < 2 || 2 * static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("residual_tails requires 2 <= k <= n/2");
    }
    std::vector<double> oriented(n);
    const double sign = orientation == Orientation::cost ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) oriented[i] = sign * residuals[i];
    std::vector<double> negated(n);
    std::transform(oriented.begin(), oriented.end(), negated.begin(),
                   [](double v) { return -v; });
    return ResidualTails{top_k(oriented, static_cast<std::size_t>(k)),
                         top_k(negated, static_cast<std::size_t>(k))};
}

ResidualTails residual_tails(const RegressionFit& fit, Orientation orientation, int k) {
    return extract_tails(std::span<const double>(fit.residuals.data(),
                                                 static_cast<std::size_t>(fit.residuals.size())),
                         orientation, k);
}

double residual_skewness(const RegressionFit& fit) {
    const auto n = fit.residuals.size();
    if (n < 3) throw std::invalid_argument("skewness requires n >= 3");
    const double mean = fit.residuals.mean();
    double m2 = 0.0, m3 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double d = fit.residuals(i) - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    if (m2 <= 0.0) throw ZeroVariance("residuals have zero variance");
    return m3 / std::pow(m2, 1.5);
}

std::vector<DiagnosticRow> run_frontier_diagnostic(const Dataset& data,
                                                   Orientation orientation,
                                                   const std::vector<int>& k_values,
                                                   const CalibrationStore& store,
                                                   double alpha,
                                                   const QuadratureConfig& q) {
    data.validate();
    for (int k : k_values) {
        // Fail fast if any required calibration is absent.
        store.get(TestKind::thin_tail, k, alpha);
    }

    // Split rows into groups, preserving a stable order inside each group.
    std::map<std::string, std::vector<Eigen::Index>> by_group;
    if (data.groups.empty()) {
        auto& all = by_group[""];
        for (Eigen::Index i = 0; i < data.response.size(); ++i) all.push_back(i);
    } else {
        for (Eigen::Index i = 0; i < data.response.size(); ++i) {
            by_group[data.groups[static_cast<std::size_t>(i)]].push_back(i);
        }
    }

    std::vector<DiagnosticRow> rows;
    for (const auto& [group, indices] : by_group) {
        auto record_group_error = [&](const std::string& message) {
            for (int k : k_values) {
                for (const char* tail : {"left", "right"}) {
                    DiagnosticRow r;
                    r.group = group;
                    r.k = k;
                    r.tail = tail;
                    r.error = message;
                    rows.push_back(std::move(r));
                }
            }
        };

        RegressionFit fit;
        try {
            Dataset sub;
            sub.response.resize(static_cast<Eigen::Index>(indices.size()));
            sub.design.resize(static_cast<Eigen::Index>(indices.size()), data.design.cols());
            for (std::size_t r = 0; r < indices.size(); ++r) {
                sub.response(static_cast<Eigen::Index>(r)) = data.response(indices[r]);
                sub.design.row(static_cast<Eigen::Index>(r)) = data.design.row(indices[r]);
            }
            fit = ols_fit(sub);
        } catch (const std::exception& e) {
            record_group_error(e.what());
            continue;
        }

        for (int k : k_values) {
            const auto& calib = store.get(TestKind::thin_tail, k, alpha);
            const auto& null_dist = store.null_for(TestKind::thin_tail, k, alpha);
            for (const char* tail_name : {"left", "right"}) {
                DiagnosticRow r;
                r.group = group;
                r.k = k;
                r.tail = tail_name;
                try {
                    const auto tails = residual_tails(fit, orientation, k);
                    const auto& tail = std::string(tail_name) == "right" ? tails.upper
                                                                         : tails.lower;
                    const auto result = thin_tail_test(tail, calib, null_dist, q);
                    r.statistic = result.statistic;
                    r.p_value = result.p_value;
                    r.reject = result.reject;
                } catch (const std::exception& e) {
                    r.error = e.what();
                }
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

}  // namespace evtail
