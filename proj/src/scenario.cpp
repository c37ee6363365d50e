#include "evtail/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "evtail/errors.hpp"
#include "json.hpp"

namespace evtail {

std::string to_string(ScenarioTest t) {
    switch (t) {
        case ScenarioTest::thin_tail_right:
            return "thin_right";
        case ScenarioTest::thin_tail_left_normal_family:
            return "thin_left";
        case ScenarioTest::equal_tail:
            return "equal";
    }
    return "?";
}

ScenarioTest scenario_test_from_string(const std::string& s) {
    if (s == "thin_right" || s == "thin_tail_right") return ScenarioTest::thin_tail_right;
    if (s == "thin_left" || s == "thin_tail_left_normal_family") {
        return ScenarioTest::thin_tail_left_normal_family;
    }
    if (s == "equal" || s == "equal_tail") return ScenarioTest::equal_tail;
    throw DataError("unknown scenario test: " + s);
}

RejectionCell run_scenario(const ScenarioSpec& spec, std::int64_t replications,
                           const CalibrationStore& store, double alpha,
                           std::uint64_t seed, const QuadratureConfig& q) {
    spec.noise.validate();
    spec.inefficiency.validate();
    const TestKind kind = spec.test == ScenarioTest::equal_tail ? TestKind::equal_tail
                                                                : TestKind::thin_tail;
    const auto& calib = store.get(kind, spec.k, alpha);
    const double log_cv = std::log(calib.cv);
    const WeightGrid w = calib.weight_grid();
    const auto w2 = kind == TestKind::equal_tail
                        ? JointWeight::uniform_alternative(calib.grid_points)
                        : JointWeight{};
    const auto lfd = kind == TestKind::equal_tail ? calib.lfd() : LeastFavorableDistribution{};

    const auto n = static_cast<std::size_t>(spec.n);
    std::int64_t rejects = 0;
    for (std::int64_t r = 0; r < replications; ++r) {
        const auto stream = static_cast<std::uint64_t>(r) * 8;
        Rng u_rng(seed, stream + 1);
        Rng w_rng(seed, stream + 2);
        Rng x_rng(seed, stream + 3);

        std::vector<double> z(n);
        const double u_sign = spec.orientation == Orientation::production ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = draw(spec.noise, w_rng) + u_sign * draw(spec.inefficiency, u_rng);
        }

        std::vector<double> residuals;
        if (spec.covariates) {
            Dataset data;
            data.response.resize(spec.n);
            data.design.resize(spec.n, 2);
            for (int i = 0; i < spec.n; ++i) {
                const double x2 = x_rng.normal();
                data.design(i, 0) = 1.0;
                data.design(i, 1) = x2;
                data.response(i) = 1.0 + x2 + z[static_cast<std::size_t>(i)];
            }
            const auto fit = ols_fit(data);
            residuals.assign(fit.residuals.data(), fit.residuals.data() + spec.n);
        } else {
            residuals = std::move(z);
        }

        const auto tails = extract_tails(residuals, spec.orientation, spec.k);
        bool reject = false;
        switch (spec.test) {
            case ScenarioTest::thin_tail_right:
                reject = thin_tail_log_statistic(self_normalize(tails.upper), w, q) > log_cv;
                break;
            case ScenarioTest::thin_tail_left_normal_family:
                reject = thin_tail_log_statistic(self_normalize(tails.lower), w, q) > log_cv;
                break;
            case ScenarioTest::equal_tail:
                reject = equal_tail_log_statistic(self_normalize(tails.lower),
                                                  self_normalize(tails.upper), w2, lfd,
                                                  q) > log_cv;
                break;
        }
        if (reject) ++rejects;
    }

    RejectionCell cell;
    cell.scenario = spec.id;
    cell.n = spec.n;
    cell.k = spec.k;
    cell.reps = replications;
    cell.seed = seed;
    cell.rate = static_cast<double>(rejects) / static_cast<double>(replications);
    cell.se = std::sqrt(cell.rate * (1.0 - cell.rate) / static_cast<double>(replications));
    return cell;
}

std::vector<double> asymptotic_power_curve(int k, std::span<const double> xi_grid,
                                           std::int64_t M, double alpha,
                                           const WeightGrid& w, std::uint64_t seed,
                                           const QuadratureConfig& q) {
    if (k < 3) throw std::invalid_argument("power curve requires k >= 3");
    const double cv = simulate_critical_value(k, alpha, w, M, seed, q);
    const double log_cv = std::log(cv);
    std::vector<double> power;
    power.reserve(xi_grid.size());
    for (std::size_t p = 0; p < xi_grid.size(); ++p) {
        const TailIndex xi(xi_grid[p]);
        std::int64_t rejects = 0;
        for (std::int64_t m = 0; m < M; ++m) {
            // Stream offset by grid index; the cv sample uses (seed, m).
            Rng rng(seed, ((static_cast<std::uint64_t>(p) + 1) << 40) ^
                              static_cast<std::uint64_t>(m));
            const auto vstar = sample_normalized(xi, k, rng);
            if (thin_tail_log_statistic(vstar, w, q) > log_cv) ++rejects;
        }
        power.push_back(static_cast<double>(rejects) / static_cast<double>(M));
    }
    return power;
}

namespace {

ScenarioSpec make_spec(const std::string& noise, const std::string& ineff, int n, int k,
                       bool covariates, ScenarioTest test) {
    ScenarioSpec s;
    s.noise = DistributionSpec::parse(noise);
    s.inefficiency = DistributionSpec::parse(ineff);
    s.n = n;
    s.k = k;
    s.covariates = covariates;
    s.test = test;
    s.orientation = Orientation::production;
    s.id = "W=" + s.noise.to_string() + "|U=" + s.inefficiency.to_string();
    return s;
}

void expand_cells(SimulationPlan& plan, const std::vector<std::pair<std::string, std::string>>& pairs,
                  bool covariates, ScenarioTest test) {
    for (const auto& [noise, ineff] : pairs) {
        for (int n : {100, 1000}) {
            for (int k : {10, 20, 50}) {
                plan.scenarios.push_back(make_spec(noise, ineff, n, k, covariates, test));
            }
        }
    }
}

}  // namespace

SimulationPlan preset_plan(const std::string& name) {
    SimulationPlan plan;
    const std::vector<std::string> noise_roster = {"normal", "laplace", "t(2)",
                                                   "sign_pareto(0.5)", "sign_f(4,4)"};
    if (name == "table1" || name == "table2") {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& u : {"half_normal", "half_laplace"}) {
            for (const auto& w : noise_roster) pairs.emplace_back(w, u);
        }
        expand_cells(plan, pairs, name == "table2", ScenarioTest::thin_tail_right);
    } else if (name == "table3") {
        std::vector<std::pair<std::string, std::string>> pairs = {
            // Null panel: equal tail indices on both sides.
            {"normal", "half_normal"},
            {"laplace", "half_laplace"},
            {"t(2)", "half_t(2)"},
            {"sign_pareto(0.5)", "pareto(0.5)"},
            {"sign_f(4,4)", "f(4,4)"},
        };
        // Alternative panel: inefficiency tail heavier than the noise tail.
        for (const auto& w : noise_roster) pairs.emplace_back(w, "pareto(0.75)");
        expand_cells(plan, pairs, false, ScenarioTest::equal_tail);
    } else if (name == "table4") {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& w : {"normal", "laplace"}) {
            for (const auto& u :
                 {"half_normal", "half_laplace", "half_t(2)", "pareto(0.5)", "f(4,4)"}) {
                pairs.emplace_back(w, u);
            }
        }
        expand_cells(plan, pairs, false, ScenarioTest::thin_tail_left_normal_family);
    } else {
        throw DataError("unknown preset: " + name);
    }
    return plan;
}

SimulationPlan parse_plan(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw DataError(std::string("invalid scenario config: ") + e.what());
    }
    SimulationPlan plan;
    plan.replications = j.value("replications", std::int64_t{1000});
    plan.alpha = j.value("alpha", 0.05);
    plan.seed = j.value("seed", std::uint64_t{1});
    for (const auto& sj : j.at("scenarios")) {
        ScenarioSpec s;
        s.noise = DistributionSpec::parse(sj.at("noise").get<std::string>());
        s.inefficiency = DistributionSpec::parse(sj.at("inefficiency").get<std::string>());
        s.n = sj.at("n").get<int>();
        s.k = sj.at("k").get<int>();
        s.covariates = sj.value("covariates", false);
        s.test = scenario_test_from_string(sj.value("test", std::string("thin_right")));
        s.orientation = sj.value("orientation", std::string("production")) == "cost"
                            ? Orientation::cost
                            : Orientation::production;
        s.id = sj.value("id", "W=" + s.noise.to_string() + "|U=" + s.inefficiency.to_string());
        plan.scenarios.push_back(std::move(s));
    }
    return plan;
}

}  // namespace evtail
