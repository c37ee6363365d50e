#include "evtail/density.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace evtail {

namespace {

// Log-integrand exponent of the t-integral, with the Gamma(k) prefactor
// and the normalization against the peak handled by the caller.
struct Exponent {
    std::vector<double> xv;  // xi * v_i for strictly positive coordinates
    double coef;             // 1 + 1/xi
    int k;

    double operator()(double t) const {
        double s = 0.0;
        for (double a : xv) s += std::log1p(a * t);
        return (k - 2) * std::log(t) - coef * s;
    }

    // d/dt of the exponent.
    double slope(double t) const {
        double s = 0.0;
        for (double a : xv) s += a / (1.0 + a * t);
        return (k - 2) / t - coef * s;
    }
};

// The exponent is unimodal on (0, inf): increasing near 0 (k > 2) and
// eventually decreasing since (1+1/xi) * #positive > k - 2. Bisect the
// slope sign change on a log-t scale.
double find_peak(const Exponent& e) {
    double lo = -45.0, hi = 45.0;
    if (e.slope(std::exp(lo)) < 0.0) return std::exp(lo);
    if (e.slope(std::exp(hi)) > 0.0) return std::exp(hi);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (e.slope(std::exp(mid)) > 0.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

}  // namespace

double normalized_log_density(TailIndex xi, const NormalizedTail& vstar,
                              const QuadratureConfig& q) {
    const auto& v = vstar.values();
    const int k = static_cast<int>(v.size());
    if (k < 3) {
        throw std::invalid_argument("normalized density requires k >= 3");
    }
    const double x = xi.value();
    double sum_v = 0.0;
    for (double vi : v) sum_v += vi;

    if (x < q.xi_zero_threshold) {
        // xi -> 0 limit: Gamma(k) Gamma(k-1) / (sum v)^{k-1}.
        return std::lgamma(k) + std::lgamma(k - 1) - (k - 1) * std::log(sum_v);
    }

    Exponent e;
    e.coef = 1.0 + 1.0 / x;
    e.k = k;
    e.xv.reserve(v.size());
    for (double vi : v) {
        if (vi > 0.0) e.xv.push_back(x * vi);
    }
    // Integrability of the tail needs (1+1/xi) * #positive > k - 1; with
    // the leading coordinate fixed at 1 this can only fail for degenerate
    // inputs where nearly all interior coordinates are exactly zero.
    if (e.coef * static_cast<double>(e.xv.size()) <= k - 1) {
        throw QuadratureFailure("normalized density: divergent tail integral");
    }

    const double t_peak = find_peak(e);
    const double g_max = e(t_peak);

    // Map t = t_peak * s / (1-s), placing the mode at s = 1/2.
    const auto f = [&](double s) {
        const double r = s / (1.0 - s);
        const double t = t_peak * r;
        if (!(t > 0.0) || t > 1e290) return 0.0;
        const double g = e(t) - g_max;
        if (g < -745.0) return 0.0;
        return std::exp(g) * t_peak / ((1.0 - s) * (1.0 - s));
    };
    const double integral = integrate(f, 0.0, 1.0, q);
    return std::lgamma(k) + g_max + std::log(integral);
}

double normalized_density(TailIndex xi, const NormalizedTail& vstar,
                          const QuadratureConfig& q) {
    return std::exp(normalized_log_density(xi, vstar, q));
}

}  // namespace evtail
