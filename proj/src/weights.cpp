#include "evtail/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace evtail {

WeightGrid WeightGrid::uniform(int n, double lo, double hi) {
    if (n < 1) throw std::invalid_argument("WeightGrid::uniform requires n >= 1");
    WeightGrid g;
    g.points.resize(static_cast<std::size_t>(n));
    g.masses.assign(static_cast<std::size_t>(n), 1.0 / n);
    for (int i = 0; i < n; ++i) {
        g.points[static_cast<std::size_t>(i)] =
            n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    return g;
}

void WeightGrid::validate() const {
    if (points.size() != masses.size() || points.empty()) {
        throw std::invalid_argument("WeightGrid: points/masses size mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0.0 || points[i] > 0.99) {
            throw std::invalid_argument("WeightGrid: points must lie in [0, 0.99]");
        }
        if (i > 0 && !(points[i] > points[i - 1])) {
            throw std::invalid_argument("WeightGrid: points must be strictly ascending");
        }
        if (masses[i] < 0.0) {
            throw std::invalid_argument("WeightGrid: masses must be nonnegative");
        }
        sum += masses[i];
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("WeightGrid: masses must sum to 1");
    }
}

JointWeight JointWeight::uniform_alternative(std::vector<double> points) {
    JointWeight w;
    w.points = std::move(points);
    const int n = static_cast<int>(w.points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            // points[j] < points[i]: xi_plus = points[j], xi_minus = points[i]
            w.entries.push_back({i, j, 0.0});
        }
    }
    if (w.entries.empty()) {
        throw std::invalid_argument("JointWeight: need at least two grid points");
    }
    const double m = 1.0 / static_cast<double>(w.entries.size());
    for (auto& e : w.entries) e.mass = m;
    return w;
}

}  // namespace evtail
