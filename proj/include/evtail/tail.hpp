#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace evtail {

// GEV shape parameter; restricted to xi >= 0 (unbounded upper support).
class TailIndex {
public:
    explicit TailIndex(double value);
    double value() const { return value_; }

private:
    double value_;
};

// The k largest observations of a sample, descending. Requires k >= 2 and
// a strict drop between the first and last element so that
// self-normalization is well defined.
class SortedTail {
public:
    explicit SortedTail(std::vector<double> values);
    const std::vector<double>& values() const { return values_; }
    std::size_t k() const { return values_.size(); }

private:
    std::vector<double> values_;
};

// Self-normalized tail: first element exactly 1, last exactly 0, interior
// weakly decreasing in [0,1]. Maximally invariant under location-scale
// transformations of the underlying sample.
class NormalizedTail {
public:
    explicit NormalizedTail(std::vector<double> values);
    const std::vector<double>& values() const { return values_; }
    std::size_t k() const { return values_.size(); }

private:
    std::vector<double> values_;
};

// (tail - tail[k-1]) / (tail[0] - tail[k-1]). Throws DegenerateTail when
// the range is zero.
NormalizedTail self_normalize(const SortedTail& tail);

// Convenience: extract the k largest values of a sample (descending) as a
// SortedTail.
SortedTail top_k(std::span<const double> sample, std::size_t k);

}  // namespace evtail
