#pragma once

#include <vector>

#include "evtail/rng.hpp"
#include "evtail/tail.hpp"

namespace evtail {

// Exact draw of the limiting top-k vector via the Poisson-process
// representation: with Gamma_j the j-th arrival of a unit-rate Poisson
// process, V_j = (Gamma_j^{-xi} - 1)/xi for xi > 0 and V_j = -log Gamma_j
// at xi = 0. Output is strictly descending with probability 1.
std::vector<double> sample_topk(TailIndex xi, int k, Rng& rng);

// self_normalize(sample_topk(...)); k >= 3.
NormalizedTail sample_normalized(TailIndex xi, int k, Rng& rng);

}  // namespace evtail
