#pragma once

#include <vector>

namespace evtail {

// Discrete weight over tail-index grid points. Masses sum to one.
struct WeightGrid {
    std::vector<double> points;  // ascending, within [0, 0.99]
    std::vector<double> masses;  // nonnegative, sum 1

    // Equally spaced n-point grid on [lo, hi] with uniform masses.
    static WeightGrid uniform(int n = 50, double lo = 0.0, double hi = 0.99);

    void validate() const;
};

// Least favorable weight over the composite equal-tail null, bundled with
// the critical value of the test it calibrates.
struct LeastFavorableDistribution {
    WeightGrid grid;
    double cv = 1.0;
};

// Joint weight over alternative pairs (xi_minus, xi_plus) with
// xi_plus < xi_minus, as index pairs into a shared point grid.
struct JointWeight {
    std::vector<double> points;
    struct Entry {
        int minus_index;
        int plus_index;
        double mass;
    };
    std::vector<Entry> entries;

    // Uniform over all ordered pairs {(i, j): points[j] < points[i]}.
    static JointWeight uniform_alternative(std::vector<double> points);
};

}  // namespace evtail
