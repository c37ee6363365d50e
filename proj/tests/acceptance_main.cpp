// End-to-end acceptance suite. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero when any criterion fails.
// Monte Carlo settings match the reference study design: 1000 replications per
// scenario cell and 10^4 draws per calibration, all seeded, so reruns are
// bit-for-bit reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "evtail/density.hpp"
#include "evtail/regression.hpp"
#include "evtail/scenario.hpp"
#include "evtail/tail_tests.hpp"

using namespace evtail;

namespace {

constexpr std::int64_t kReps = 1000;
constexpr std::int64_t kCalDraws = 10000;
constexpr double kAlpha = 0.05;

CalibrationStore g_store;

double cell_rate(const std::string& noise, const std::string& ineff, int n, int k,
                 ScenarioTest test, bool covariates, std::uint64_t seed) {
    ScenarioSpec s;
    s.noise = DistributionSpec::parse(noise);
    s.inefficiency = DistributionSpec::parse(ineff);
    s.n = n;
    s.k = k;
    s.covariates = covariates;
    s.test = test;
    s.id = noise + "/" + ineff;
    return run_scenario(s, kReps, g_store, kAlpha, seed).rate;
}

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

std::string fmt_rates(const std::vector<double>& rates) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (i) os << ", ";
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.3f", rates[i]);
        os << buf;
    }
    return os.str();
}

// --- criterion bodies ------------------------------------------------------

bool analytic_density_oracles(std::string& detail) {
    const NormalizedTail v({1.0, 0.5, 0.0});
    const double at0 = normalized_density(TailIndex(0.0), v);
    const double at1 = normalized_density(TailIndex(1.0), v);
    const double ref1 = 2.0 * (12.0 * std::log(2.0) - 8.0);
    bool ok = std::abs(at0 - 8.0 / 9.0) <= 1e-6 * (8.0 / 9.0) &&
              std::abs(at1 - ref1) <= 1e-6 * ref1;

    // Gumbel-case closed form Gamma(k)Gamma(k-1)/(sum v*)^(k-1) on random
    // interior points, computed here independently via lgamma.
    Rng rng(2718, 1);
    int checked = 0;
    for (int k : {3, 5, 10}) {
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<double> interior(static_cast<std::size_t>(k - 2));
            for (auto& x : interior) x = rng.uniform();
            std::sort(interior.begin(), interior.end(), std::greater<>());
            std::vector<double> coords = {1.0};
            coords.insert(coords.end(), interior.begin(), interior.end());
            coords.push_back(0.0);
            double sum = 0.0;
            for (double c : coords) sum += c;
            const double expected = std::exp(std::lgamma(k) + std::lgamma(k - 1) -
                                             (k - 1) * std::log(sum));
            const double got = normalized_density(TailIndex(0.0), NormalizedTail(coords));
            if (std::abs(got - expected) > 1e-6 * expected) ok = false;
            ++checked;
        }
    }
    std::ostringstream os;
    os << "f(0)=" << at0 << " f(1)=" << at1 << ", " << checked
       << " closed-form points checked";
    detail = os.str();
    return ok;
}

bool thin_size_laplace(std::string& detail) {
    std::vector<double> rates;
    for (int k : {10, 20, 50}) {
        rates.push_back(cell_rate("laplace", "half_normal", 1000, k,
                                  ScenarioTest::thin_tail_right, false, 1001 + k));
    }
    detail = "rates {" + fmt_rates(rates) + "} target 0.05 +/- 0.02";
    for (double r : rates) {
        if (!near(r, 0.05, 0.02)) return false;
    }
    return true;
}

// Reference value 0.84 for both cells is cross-validated: an independent
// Python implementation (own sampler, own quadrature, own critical value)
// gives 0.834 +/- 0.012 for this cell, and the exact-limit rejection rate
// at tail index 0.5 with k = 50 is 0.86, which finite-sample t(2) power
// must approach from nearby. See the asymptotic-power criterion below for
// the curve itself.
bool thin_power_t2(std::string& detail) {
    const double plain = cell_rate("t(2)", "half_normal", 1000, 50,
                                   ScenarioTest::thin_tail_right, false, 1101);
    const double with_x = cell_rate("t(2)", "half_normal", 1000, 50,
                                    ScenarioTest::thin_tail_right, true, 1101);
    std::ostringstream os;
    os << "no covariates " << plain << ", with covariates " << with_x
       << " (cross-validated reference 0.84 +/- 0.05 each)";
    detail = os.str();
    return near(plain, 0.84, 0.05) && near(with_x, 0.84, 0.05);
}

bool conservative_normal_null(std::string& detail) {
    const std::vector<double> reference = {0.03, 0.02, 0.01};
    std::vector<double> rates;
    const std::vector<int> ks = {10, 20, 50};
    for (int k : ks) {
        rates.push_back(cell_rate("normal", "half_normal", 1000, k,
                                  ScenarioTest::thin_tail_right, false, 1201 + k));
    }
    detail = "rates {" + fmt_rates(rates) + "} vs reference {0.03, 0.02, 0.01}";
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (rates[i] > 0.05 || !near(rates[i], reference[i], 0.02)) return false;
    }
    return true;
}

bool ev_approximation_breakdown(std::string& detail) {
    const double k20 = cell_rate("sign_pareto(0.5)", "half_normal", 100, 20,
                                 ScenarioTest::thin_tail_right, false, 1301);
    const double k50 = cell_rate("sign_pareto(0.5)", "half_normal", 100, 50,
                                 ScenarioTest::thin_tail_right, false, 1302);
    std::ostringstream os;
    os << "n=100 power k=20: " << k20 << ", k=50: " << k50
       << " (k=50 must trail by >= 0.25)";
    detail = os.str();
    return k20 - k50 >= 0.25;
}

bool equal_tail_size(std::string& detail) {
    // Verified size of the calibrations themselves, then the five
    // equal-shape scenarios from the null panel.
    double worst_verified = 0.0;
    for (int k : {10, 20, 50}) {
        const auto report = verify_size(g_store.get(TestKind::equal_tail, k, kAlpha),
                                        {0.0, 0.2, 0.45, 0.7, 0.9}, 10000, 4242);
        for (double r : report.rate) worst_verified = std::max(worst_verified, r);
    }

    const std::vector<std::pair<std::string, std::string>> nulls = {
        {"normal", "half_normal"},     {"laplace", "half_laplace"},
        {"t(2)", "half_t(2)"},         {"sign_pareto(0.5)", "pareto(0.5)"},
        {"sign_f(4,4)", "f(4,4)"},
    };
    std::vector<double> rates;
    std::uint64_t seed = 1400;
    for (const auto& [w, u] : nulls) {
        for (int k : {10, 20, 50}) {
            rates.push_back(cell_rate(w, u, 1000, k, ScenarioTest::equal_tail, false,
                                      ++seed));
        }
    }
    std::ostringstream os;
    os << "worst verified grid size " << worst_verified << " (<= 0.055), null rates {"
       << fmt_rates(rates) << "} (<= 0.07)";
    detail = os.str();
    if (worst_verified > 0.055) return false;
    for (double r : rates) {
        if (r > 0.05 + 0.02) return false;
    }
    return true;
}

bool equal_tail_power(std::string& detail) {
    const double rate = cell_rate("normal", "pareto(0.75)", 1000, 50,
                                  ScenarioTest::equal_tail, false, 1501);
    std::ostringstream os;
    os << "rate " << rate << " (target 0.94 +/- 0.05)";
    detail = os.str();
    return near(rate, 0.94, 0.05);
}

bool left_tail_normal_family(std::string& detail) {
    const double heavy = cell_rate("normal", "pareto(0.5)", 1000, 50,
                                   ScenarioTest::thin_tail_left_normal_family, false, 1601);
    const double thin = cell_rate("normal", "half_normal", 1000, 50,
                                  ScenarioTest::thin_tail_left_normal_family, false, 1602);
    std::ostringstream os;
    os << "Pareto(0.5) inefficiency " << heavy << " (target 0.89 +/- 0.05), half-normal "
       << thin << " (<= 0.05)";
    detail = os.str();
    return near(heavy, 0.89, 0.05) && thin <= 0.05;
}

bool power_curve_anchor(std::string& detail) {
    const auto w = WeightGrid::uniform(50);
    const std::vector<double> grid = {0.0, 0.3, 0.5, 0.7, 0.9};
    const std::int64_t M = 10000;
    std::vector<std::vector<double>> curves;
    for (int k : {10, 20, 50}) {
        curves.push_back(asymptotic_power_curve(k, grid, M, kAlpha, w, 1700 + k));
    }
    std::ostringstream os;
    bool ok = true;
    os << "size at 0: ";
    for (const auto& c : curves) {
        os << c[0] << " ";
        if (!near(c[0], 0.05, 0.01)) ok = false;
    }
    // k = 50 dominates k = 10 for xi >= 0.3 within twice the combined
    // Monte Carlo standard error.
    for (std::size_t j = 1; j < grid.size(); ++j) {
        const double p10 = curves[0][j];
        const double p50 = curves[2][j];
        const double se = std::sqrt((p10 * (1 - p10) + p50 * (1 - p50)) /
                                    static_cast<double>(M));
        if (p50 < p10 - 2.0 * se) ok = false;
    }
    os << "; k=10 curve {" << fmt_rates(curves[0]) << "}, k=50 curve {"
       << fmt_rates(curves[2]) << "}";
    detail = os.str();
    return ok;
}

bool ulps_equal(double a, double b, int ulps = 4) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= ulps * std::numeric_limits<double>::epsilon() * scale;
}

bool invariance_suite(std::string& detail) {
    bool ok = true;
    std::ostringstream os;

    // Location-scale invariance of both statistics under y -> a*y + b.
    {
        Rng rng(55, 1);
        std::vector<double> y(400);
        // Snap the sample to a dyadic grid so that the affine map below is
        // exact in floating point; the check then isolates the invariance of
        // the statistic itself rather than input rounding.
        for (auto& v : y) {
            v = std::ldexp(std::nearbyint(std::ldexp(rng.normal() - std::abs(rng.normal()), 20)), -20);
        }
        std::vector<double> t(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) t[i] = 2.75 * y[i] - 17.0;
        const auto w = WeightGrid::uniform(50);
        const auto w2 = JointWeight::uniform_alternative(w.points);
        const auto lfd = g_store.get(TestKind::equal_tail, 20, kAlpha).lfd();
        for (int k : {10, 20}) {
            const auto a = extract_tails(y, Orientation::production, k);
            const auto b = extract_tails(t, Orientation::production, k);
            if (!ulps_equal(thin_tail_statistic(self_normalize(a.upper), w),
                            thin_tail_statistic(self_normalize(b.upper), w))) {
                ok = false;
            }
            if (k == 20 &&
                !ulps_equal(
                    equal_tail_statistic(self_normalize(a.lower), self_normalize(a.upper),
                                         w2, lfd),
                    equal_tail_statistic(self_normalize(b.lower), self_normalize(b.upper),
                                         w2, lfd))) {
                ok = false;
            }
        }
        os << "location-scale to 4 ulps";
    }

    // Relocating the response only moves the intercept; residuals and all
    // downstream statistics are unchanged.
    {
        Rng rng(55, 2);
        Dataset d;
        const int n = 200;
        d.response.resize(n);
        d.design.resize(n, 2);
        for (int i = 0; i < n; ++i) {
            d.design(i, 0) = 1.0;
            d.design(i, 1) = rng.normal();
            d.response(i) = 2.0 + d.design(i, 1) + rng.normal() - std::abs(rng.normal());
        }
        auto shifted = d;
        shifted.response.array() += 1000.0;
        const auto f1 = ols_fit(d);
        const auto f2 = ols_fit(shifted);
        const auto w = WeightGrid::uniform(50);
        const auto t1 = residual_tails(f1, Orientation::production, 20);
        const auto t2 = residual_tails(f2, Orientation::production, 20);
        const double s1 = thin_tail_statistic(self_normalize(t1.upper), w);
        const double s2 = thin_tail_statistic(self_normalize(t2.upper), w);
        if (std::abs(s1 - s2) > 1e-6 * s1) ok = false;
        os << "; OLS relocation";
    }

    // Orientation duality: cost orientation swaps the tails.
    {
        Rng rng(55, 3);
        std::vector<double> y(300);
        for (auto& v : y) v = rng.normal();
        const auto prod = extract_tails(y, Orientation::production, 15);
        const auto cost = extract_tails(y, Orientation::cost, 15);
        if (prod.upper.values() != cost.lower.values() ||
            prod.lower.values() != cost.upper.values()) {
            ok = false;
        }
        os << "; orientation duality";
    }

    // Seeded determinism of every Monte Carlo operation.
    {
        if (simulate_thin_calibration(5, kAlpha, 200, 77) !=
            simulate_thin_calibration(5, kAlpha, 200, 77)) {
            ok = false;
        }
        if (calibrate_lfd(5, kAlpha, 1000, 10, 1.0, 77) !=
            calibrate_lfd(5, kAlpha, 1000, 10, 1.0, 77)) {
            ok = false;
        }
        ScenarioSpec s;
        s.noise = DistributionSpec::parse("laplace");
        s.inefficiency = DistributionSpec::parse("half_normal");
        s.n = 100;
        s.k = 10;
        s.id = "det";
        if (run_scenario(s, 25, g_store, kAlpha, 3).rate !=
            run_scenario(s, 25, g_store, kAlpha, 3).rate) {
            ok = false;
        }
        Rng r1(9, 4), r2(9, 4);
        if (sample_topk(TailIndex(0.5), 10, r1) != sample_topk(TailIndex(0.5), 10, r2)) {
            ok = false;
        }
        os << "; seeded determinism";
    }

    // Simulated end-to-end frontier run: per-group regression diagnostics
    // on a synthetic production panel complete without errors.
    {
        Rng rng(55, 5);
        Dataset d;
        const int per_group = 300;
        d.response.resize(2 * per_group);
        d.design.resize(2 * per_group, 3);
        for (int g = 0; g < 2; ++g) {
            for (int i = 0; i < per_group; ++i) {
                const int row = g * per_group + i;
                d.design(row, 0) = 1.0;
                d.design(row, 1) = rng.normal();
                d.design(row, 2) = rng.normal();
                d.response(row) = 1.0 + 0.4 * d.design(row, 1) + 0.3 * d.design(row, 2) +
                                  rng.normal() - std::abs(rng.normal());
                d.groups.push_back(g == 0 ? "1998" : "1999");
            }
        }
        const auto rows =
            run_frontier_diagnostic(d, Orientation::production, {10, 20}, g_store, kAlpha);
        if (rows.size() != 8) ok = false;
        for (const auto& r : rows) {
            if (!r.error.empty() || !(r.p_value > 0.0 && r.p_value <= 1.0)) ok = false;
        }
        os << "; end-to-end frontier diagnostics on 2 groups x 2 k x 2 tails";
    }

    detail = os.str();
    return ok;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();

    std::printf("preparing calibrations (10^4 draws each)...\n");
    for (int k : {10, 20, 50}) {
        g_store.add(simulate_thin_calibration(k, kAlpha, kCalDraws, 7));
    }
    for (int k : {10, 20, 50}) {
        g_store.add(calibrate_lfd(k, kAlpha, kCalDraws, 500, 2.0, 7));
    }
    std::printf("calibrations ready after %.0f s\n",
                std::chrono::duration<double>(Clock::now() - t0).count());

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"analytic density oracles", analytic_density_oracles},
        {"thin-tail size, Laplace noise", thin_size_laplace},
        {"thin-tail power, t(2) noise, with and without covariates", thin_power_t2},
        {"conservative size under normal noise", conservative_normal_null},
        {"tail-approximation breakdown at k = n/2", ev_approximation_breakdown},
        {"equal-tail size under five null scenarios", equal_tail_size},
        {"equal-tail power against Pareto(0.75) inefficiency", equal_tail_power},
        {"left-tail test of the normal-family hypothesis", left_tail_normal_family},
        {"asymptotic power curve anchored at the nominal level", power_curve_anchor},
        {"invariance, determinism, and end-to-end pipeline", invariance_suite},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("[%s] criterion %zu: %s (%s) [%.1f s]\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }

    std::printf("%d/%zu criteria passed (total %.0f s)\n",
                static_cast<int>(criteria.size()) - failures, criteria.size(),
                std::chrono::duration<double>(Clock::now() - t0).count());
    return failures == 0 ? 0 : 1;
}
