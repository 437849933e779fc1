#include "redsim/presets.hpp"

#include "redsim/errors.hpp"

namespace redsim {

SimConfig sweep_preset(const std::string& name, bool fig8_q15) {
  SimConfig cfg;
  if (name == "fig5") {
    cfg.n = 13, cfg.r = 4, cfg.mu1 = 10, cfg.q = 10, cfg.p_long = 0.1;
  } else if (name == "fig6") {
    cfg.n = 21, cfg.r = 5, cfg.mu1 = 10, cfg.q = 10, cfg.p_long = 0.1;
  } else if (name == "fig7") {
    cfg.n = 21, cfg.r = 5, cfg.mu1 = 10, cfg.q = 50, cfg.p_long = 0.1;
  } else if (name == "fig8") {
    cfg.n = 21, cfg.r = 5, cfg.mu1 = 10, cfg.q = fig8_q15 ? 15 : 50, cfg.p_long = 0.5;
  } else {
    throw invalid_parameter("unknown sweep preset '" + name +
                            "' (expected fig5|fig6|fig7|fig8)");
  }
  return cfg;
}

std::vector<double> default_lambda_grid(const SimConfig& cfg, int steps,
                                        double rho_lo, double rho_hi) {
  if (steps < 1) throw invalid_parameter("lambda grid needs at least one step");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  const double per_rho = cfg.n / cfg.mean_service_time();
  for (int i = 0; i < steps; ++i) {
    const double rho =
        steps == 1 ? rho_lo : rho_lo + (rho_hi - rho_lo) * i / (steps - 1);
    grid.push_back(rho * per_rho);
  }
  return grid;
}

}  // namespace redsim
