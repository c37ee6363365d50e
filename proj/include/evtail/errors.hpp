#pragma once

#include <stdexcept>
#include <string>

namespace evtail {

// Thrown when a retained tail has zero range (all k values tied); the
// self-normalized statistic is undefined in that case.
struct DegenerateTail : std::runtime_error {
    explicit DegenerateTail(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature could not meet the requested tolerance within the
// subdivision budget.
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// A test was invoked with a calibration artifact whose (kind, k, alpha)
// does not match the input.
struct CalibrationMismatch : std::runtime_error {
    explicit CalibrationMismatch(const std::string& what) : std::runtime_error(what) {}
};

// The least-favorable-distribution iteration exhausted its budget without
// achieving uniform size control on the grid.
struct CalibrationDivergence : std::runtime_error {
    explicit CalibrationDivergence(const std::string& what) : std::runtime_error(what) {}
};

// Design matrix is numerically rank deficient.
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

// Residuals have zero variance; standardized moments are undefined.
struct ZeroVariance : std::runtime_error {
    explicit ZeroVariance(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (CSV schema, config files).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evtail
