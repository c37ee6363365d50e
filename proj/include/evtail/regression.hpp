#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "evtail/tail.hpp"
#include "evtail/tail_tests.hpp"

namespace evtail {

enum class Orientation { production, cost };

// Cross-sectional regression data. The design matrix carries the constant
// column explicitly; rows may carry an optional group label (e.g. year).
struct Dataset {
    Eigen::VectorXd response;
    Eigen::MatrixXd design;
    std::vector<std::string> groups;  // empty, or one label per row

    void validate() const;  // n > p, finite entries
};

struct RegressionFit {
    Eigen::VectorXd beta;
    Eigen::VectorXd residuals;
    double condition = 0.0;  // ratio of largest to smallest singular value
};

// Least squares via SVD; throws RankDeficient when the relative smallest
// singular value drops below 1e-10.
RegressionFit ols_fit(const Dataset& data);

// Extracts both residual tails after applying the orientation sign (cost
// orientation negates residuals first). The lower tail is returned negated
// so both tails feed self_normalize identically.
struct ResidualTails {
    SortedTail upper;
    SortedTail lower;
};
ResidualTails residual_tails(const RegressionFit& fit, Orientation orientation, int k);

// Same extraction for a raw composed-error sample.
ResidualTails extract_tails(std::span<const double> residuals, Orientation orientation,
                            int k);

// Sample third standardized moment of the residuals. Negative skew is the
// well-posed production-frontier direction.
double residual_skewness(const RegressionFit& fit);

struct DiagnosticRow {
    std::string group;
    int k = 0;
    std::string tail;  // "left" or "right"
    double statistic = 0.0;
    double p_value = 1.0;
    bool reject = false;
    std::string error;  // nonempty when this cell failed
};

// Per-group OLS + two-tailed thin-tail diagnostics for every requested k.
// Groups fail independently; a failed cell records its error and the rest
// proceed.
std::vector<DiagnosticRow> run_frontier_diagnostic(const Dataset& data,
                                                   Orientation orientation,
                                                   const std::vector<int>& k_values,
                                                   const CalibrationStore& store,
                                                   double alpha,
                                                   const QuadratureConfig& q = {});

}  // namespace evtail
