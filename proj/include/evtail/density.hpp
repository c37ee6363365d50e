#pragma once

#include "evtail/quadrature.hpp"
#include "evtail/tail.hpp"

namespace evtail {

// log of the limiting density of the self-normalized top-k statistic,
//   Gamma(k) int_0^inf t^{k-2} exp(-(1+1/xi) sum_i log(1+xi v*_i t)) dt.
// Evaluated in the log domain so large k does not overflow. For
// xi < q.xi_zero_threshold the analytic limit
//   Gamma(k) Gamma(k-1) / (sum_i v*_i)^{k-1}
// is used. Requires k >= 3.
double normalized_log_density(TailIndex xi, const NormalizedTail& vstar,
                              const QuadratureConfig& q = {});

double normalized_density(TailIndex xi, const NormalizedTail& vstar,
                          const QuadratureConfig& q = {});

}  // namespace evtail
