#pragma once

#include <string>
#include <vector>

#include "redsim/simqueue.hpp"

namespace redsim {

// Queuing-experiment parameter tuples (n, r, mu1, q, p). fig8 ships with
// q=50; the caption and the accompanying text disagree (50 vs 15), so the
// q=15 variant is selectable and neither is treated as ground truth.
SimConfig sweep_preset(const std::string& name, bool fig8_q15 = false);

// Arrival-rate grid such that utilisation covers steps evenly spaced in
// [rho_lo, rho_hi]; the default eight points span the low and high regimes.
std::vector<double> default_lambda_grid(const SimConfig& cfg, int steps = 8,
                                        double rho_lo = 0.30, double rho_hi = 0.95);

}  // namespace redsim
