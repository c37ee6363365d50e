#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "evtail/errors.hpp"

namespace evtail {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-300;
    int max_subdivisions = 400;
    // Below this shape value the analytic xi -> 0 limit of the normalized
    // density is used instead of quadrature.
    double xi_zero_threshold = 1e-6;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (positive half).
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kGK15WeightsK[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kGK15WeightsG[8] = {
    0.417959183673469, 0.000000000000000, 0.381830050505119, 0.000000000000000,
    0.279705391489277, 0.000000000000000, 0.129484966168870, 0.000000000000000};

template <class F>
void gk15_panel(F&& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(c);
    double k15 = kGK15WeightsK[0] * f0;
    double g7 = kGK15WeightsG[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGK15Nodes[i];
        const double fi = f(c + dx) + f(c - dx);
        k15 += kGK15WeightsK[i] * fi;
        g7 += kGK15WeightsG[i] * fi;
    }
    value = k15 * h;
    error = std::abs((k15 - g7) * h);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration on a finite interval. Subdivides the
// panel with the largest error estimate first. Throws QuadratureFailure
// when the budget is exhausted before meeting tolerance.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& q = {}) {
    struct Panel {
        double a, b, value, error;
        bool operator<(const Panel& o) const { return error < o.error; }
    };
    std::priority_queue<Panel> panels;
    double total = 0.0, total_err = 0.0;
    {
        Panel p{a, b, 0.0, 0.0};
        detail::gk15_panel(f, a, b, p.value, p.error);
        total = p.value;
        total_err = p.error;
        panels.push(p);
    }
    int splits = 0;
    while (total_err > std::max(q.abs_tol, q.rel_tol * std::abs(total))) {
        if (++splits > q.max_subdivisions) {
            throw QuadratureFailure("adaptive quadrature: tolerance not met after " +
                                    std::to_string(q.max_subdivisions) + " subdivisions");
        }
        Panel top = panels.top();
        panels.pop();
        total -= top.value;
        total_err -= top.error;
        const double mid = 0.5 * (top.a + top.b);
        for (auto [lo, hi] : {std::pair{top.a, mid}, std::pair{mid, top.b}}) {
            Panel p{lo, hi, 0.0, 0.0};
            detail::gk15_panel(f, lo, hi, p.value, p.error);
            total += p.value;
            total_err += p.error;
            panels.push(p);
        }
    }
    return total;
}

}  // namespace evtail
