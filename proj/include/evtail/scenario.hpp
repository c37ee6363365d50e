#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "evtail/distributions.hpp"
#include "evtail/regression.hpp"
#include "evtail/tail_tests.hpp"

namespace evtail {

enum class ScenarioTest { thin_tail_right, thin_tail_left_normal_family, equal_tail };

std::string to_string(ScenarioTest t);
ScenarioTest scenario_test_from_string(const std::string& s);

// One cell of the simulation study: error-component distributions, sample
// size, tail size, covariate switch, and which test to run.
struct ScenarioSpec {
    std::string id;
    DistributionSpec noise;
    DistributionSpec inefficiency;
    int n = 1000;
    int k = 20;
    bool covariates = false;
    ScenarioTest test = ScenarioTest::thin_tail_right;
    Orientation orientation = Orientation::production;
};

struct RejectionCell {
    std::string scenario;
    int n = 0;
    int k = 0;
    double rate = 0.0;
    double se = 0.0;
    std::int64_t reps = 0;
    std::uint64_t seed = 0;
};

// Runs one scenario cell. Replication r derives its component draws (U,
// W, X) from disjoint substreams of (seed, r), so adding covariates does
// not perturb the error draws and results are order independent.
RejectionCell run_scenario(const ScenarioSpec& spec, std::int64_t replications,
                           const CalibrationStore& store, double alpha,
                           std::uint64_t seed, const QuadratureConfig& q = {});

// Rejection frequency of the thin-tail test applied to exact draws from
// the limiting law at each grid value of xi. The critical value is
// simulated internally from an independent xi = 0 sample of the same size.
std::vector<double> asymptotic_power_curve(int k, std::span<const double> xi_grid,
                                           std::int64_t M, double alpha,
                                           const WeightGrid& w, std::uint64_t seed,
                                           const QuadratureConfig& q = {});

struct SimulationPlan {
    std::vector<ScenarioSpec> scenarios;
    std::int64_t replications = 1000;
    double alpha = 0.05;
    std::uint64_t seed = 1;
};

// Built-in simulation study designs: "table1" .. "table4".
SimulationPlan preset_plan(const std::string& name);

// Declarative JSON config: {"scenarios": [...], "replications", "alpha", "seed"}.
SimulationPlan parse_plan(const std::string& json_text);

}  // namespace evtail
