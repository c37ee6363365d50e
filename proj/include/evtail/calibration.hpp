#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evtail/weights.hpp"

namespace evtail {

enum class TestKind { thin_tail, equal_tail };

std::string to_string(TestKind kind);
TestKind test_kind_from_string(const std::string& s);

// Persisted outcome of a calibration run: the critical value for a given
// (kind, k, alpha), the weight grid it was simulated under, and for the
// equal-tail test the least-favorable masses. Serialization round-trips
// bit-exactly.
struct CalibrationArtifact {
    int version = 1;
    TestKind kind = TestKind::thin_tail;
    int k = 0;
    double alpha = 0.05;
    double cv = 0.0;
    std::vector<double> grid_points;
    std::optional<std::vector<double>> lambda_masses;  // equal_tail only
    std::int64_t mc_draws = 0;
    std::uint64_t seed = 0;

    // "thin/k=50/alpha=0.05/v1/seed=7" style identifier for provenance.
    std::string id() const;

    // Alternative weight used by both tests: uniform masses over the grid.
    WeightGrid weight_grid() const;

    LeastFavorableDistribution lfd() const;  // throws if kind != equal_tail

    bool operator==(const CalibrationArtifact&) const = default;
};

std::string serialize(const CalibrationArtifact& artifact);
CalibrationArtifact parse_artifact(const std::string& text);

// Conventional file name inside a calibration directory.
std::string artifact_filename(const CalibrationArtifact& artifact);

}  // namespace evtail
