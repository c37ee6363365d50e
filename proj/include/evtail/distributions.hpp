#pragma once

#include <string>
#include <vector>

#include "evtail/rng.hpp"

namespace evtail {

// Error-component distribution roster for the simulation study. Half
// variants take the absolute value of the symmetric base draw;
// sign-symmetrized variants multiply a positive base draw by an
// independent fair sign.
struct DistributionSpec {
    enum class Family { normal, laplace, student_t, pareto, fisher_f };
    enum class Modifier { none, half, sign_symmetrized };

    Family family = Family::normal;
    Modifier modifier = Modifier::none;
    double param1 = 0.0;  // degrees of freedom (t, F numerator) or tail index (Pareto)
    double param2 = 0.0;  // F denominator degrees of freedom

    // Accepts "normal", "laplace", "t(2)", "pareto(0.5)", "f(4,4)",
    // "half_normal", "half_laplace", "half_t(2)", "sign_pareto(0.5)",
    // "sign_f(4,4)".
    static DistributionSpec parse(const std::string& text);
    std::string to_string() const;

    void validate() const;
};

double draw(const DistributionSpec& spec, Rng& rng);

std::vector<double> sample_distribution(const DistributionSpec& spec, std::int64_t n,
                                        Rng& rng);

}  // namespace evtail
