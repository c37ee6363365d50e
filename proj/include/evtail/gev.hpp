#pragma once

#include <span>

#include "evtail/tail.hpp"

namespace evtail {

// Generalized extreme value CDF G_xi(v). Total function: returns 0 outside
// the support; continuous in xi at 0 for fixed v.
double gev_cdf(TailIndex xi, double v);

// log of the GEV density g_xi(v) = dG_xi(v)/dv; -infinity outside the
// support.
double gev_log_pdf(TailIndex xi, double v);

// log of the joint density of the k largest normalized order statistics,
//   G_xi(v_k) * prod_i g_xi(v_i) / G_xi(v_i),
// on v_k <= ... <= v_1. Returns -infinity when the ordering is violated or
// any point lies outside the support.
double joint_topk_log_density(TailIndex xi, std::span<const double> v);

}  // namespace evtail
