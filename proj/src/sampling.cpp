#include "evtail/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace evtail {

std::vector<double> sample_topk(TailIndex xi, int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("sample_topk requires k >= 1");
    const double x = xi.value();
    std::vector<double> out(static_cast<std::size_t>(k));
    double arrival = 0.0;
    for (int j = 0; j < k; ++j) {
        arrival += rng.exponential();
        if (x == 0.0) {
            out[static_cast<std::size_t>(j)] = -std::log(arrival);
        } else {
            // (Gamma^{-xi} - 1) / xi, via expm1 for accuracy at small xi.
            out[static_cast<std::size_t>(j)] =
                std::expm1(-x * std::log(arrival)) / x;
        }
    }
    return out;
}

NormalizedTail sample_normalized(TailIndex xi, int k, Rng& rng) {
    if (k < 3) throw std::invalid_argument("sample_normalized requires k >= 3");
    return self_normalize(SortedTail(sample_topk(xi, k, rng)));
}

}  // namespace evtail
