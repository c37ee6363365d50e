#include "evtail/gev.hpp"

#include <cmath>
#include <limits>

namespace evtail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double gev_cdf(TailIndex xi, double v) {
    const double x = xi.value();
    if (x == 0.0) {
        return std::exp(-std::exp(-v));
    }
    const double a = 1.0 + x * v;
    if (a <= 0.0) return 0.0;
    // (1+xi v)^{-1/xi} computed through logs for accuracy at small xi.
    return std::exp(-std::exp(-std::log1p(x * v) / x));
}

double gev_log_pdf(TailIndex xi, double v) {
    const double x = xi.value();
    if (x == 0.0) {
        return -v - std::exp(-v);
    }
    const double a = 1.0 + x * v;
    if (a <= 0.0) return -kInf;
    const double log_a = std::log1p(x * v);
    // g(v) = (1+xi v)^{-1/xi - 1} exp(-(1+xi v)^{-1/xi})
    return -(1.0 / x + 1.0) * log_a - std::exp(-log_a / x);
}

double joint_topk_log_density(TailIndex xi, std::span<const double> v) {
    if (v.empty()) return -kInf;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (!(v[i] >= v[i + 1])) return -kInf;
    }
    const double x = xi.value();
    const double vk = v.back();
    double log_G_vk;
    if (x == 0.0) {
        log_G_vk = -std::exp(-vk);
    } else {
        if (1.0 + x * vk <= 0.0) return -kInf;
        log_G_vk = -std::exp(-std::log1p(x * vk) / x);
    }
    double sum = log_G_vk;
    for (double vi : v) {
        // log g(vi) - log G(vi)
        if (x == 0.0) {
            sum += -vi;
        } else {
            if (1.0 + x * vi <= 0.0) return -kInf;
            sum += -(1.0 / x + 1.0) * std::log1p(x * vi);
        }
    }
    return sum;
}

}  // namespace evtail
