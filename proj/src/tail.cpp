#include "evtail/tail.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evtail/errors.hpp"

namespace evtail {

TailIndex::TailIndex(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument("TailIndex must be finite and >= 0, got " +
                                    std::to_string(value));
    }
}

SortedTail::SortedTail(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("SortedTail requires k >= 2");
    }
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (!(values_[i] >= values_[i + 1])) {
            throw std::invalid_argument("SortedTail values must be descending");
        }
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("SortedTail values must be finite");
        }
    }
}

NormalizedTail::NormalizedTail(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw std::invalid_argument("NormalizedTail requires k >= 2");
    }
    if (values_.front() != 1.0 || values_.back() != 0.0) {
        throw std::invalid_argument("NormalizedTail must start at 1 and end at 0");
    }
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (!(values_[i] >= values_[i + 1])) {
            throw std::invalid_argument("NormalizedTail values must be descending");
        }
    }
}

NormalizedTail self_normalize(const SortedTail& tail) {
    const auto& z = tail.values();
    const double lo = z.back();
    const double range = z.front() - lo;
    if (range <= 0.0) {
        throw DegenerateTail("all retained tail values are tied; range is zero");
    }
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = (z[i] - lo) / range;
    }
    // Pin the endpoints exactly; interior values are clamped to [0,1] to
    // absorb roundoff from the division.
    out.front() = 1.0;
    out.back() = 0.0;
    for (auto& v : out) v = std::clamp(v, 0.0, 1.0);
    return NormalizedTail(std::move(out));
}

SortedTail top_k(std::span<const double> sample, std::size_t k) {
    if (k > sample.size()) {
        throw std::invalid_argument("top_k: k exceeds sample size");
    }
    std::vector<double> work(sample.begin(), sample.end());
    std::partial_sort(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(k),
                      work.end(), std::greater<>());
    work.resize(k);
    return SortedTail(std::move(work));
}

}  // namespace evtail
