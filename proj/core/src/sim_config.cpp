#include "slitflow/sim_config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slitflow/errors.hpp"

namespace slitflow {
namespace {

void require(bool ok, const char* invariant) {
  if (!ok) {
    throw InvariantError(std::string("invariant violated: ") + invariant);
  }
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string_view to_string(RecessionModel model) {
  switch (model) {
    case RecessionModel::full:
      return "full";
    case RecessionModel::asymptotic:
      return "asymptotic";
    case RecessionModel::constant:
      return "constant";
    case RecessionModel::none:
      return "none";
  }
  return "full";
}

RecessionModel parse_recession_model(std::string_view name) {
  for (auto m : {RecessionModel::full, RecessionModel::asymptotic,
                 RecessionModel::constant, RecessionModel::none}) {
    if (to_string(m) == name) return m;
  }
  throw InvariantError("unknown recession model '" + std::string(name) +
                       "' (expected full, asymptotic, constant or none)");
}

void SimConfig::validate() const {
  require(!z_levels.empty(), "sim.z_levels not empty");
  require(std::all_of(z_levels.begin(), z_levels.end(),
                      [](double z) { return z >= 0.0 && z <= 1.0; }),
          "sim.z_levels in [0, 1]");
  require(x2_points >= 2, "sim.x2_points >= 2");
  require(positive(t_end), "sim.t_end > 0");
  require(std::all_of(output_times.begin(), output_times.end(),
                      [](double t) { return std::isfinite(t) && t >= 0.0; }),
          "sim.output_times >= 0");
  require(std::is_sorted(output_times.begin(), output_times.end()),
          "sim.output_times sorted");
  require(output_times.empty() || output_times.back() <= t_end,
          "sim.output_times <= sim.t_end");
  require(positive(dt), "sim.dt > 0");
  require(positive(ode_rel_tol), "sim.ode_rel_tol > 0");
  require(max_steps > 0, "sim.max_steps > 0");
  require(positive(pressure_rel_tol), "sim.pressure_rel_tol > 0");
  require(positive(recession_tol), "sim.recession_tol > 0");
  require(std::isfinite(burn_in_factor) && burn_in_factor >= 0.0,
          "sim.burn_in_factor >= 0");
  require(std::isfinite(bound_tol) && bound_tol >= 0.0, "sim.bound_tol >= 0");
  require(positive(asymptotic_time), "sim.asymptotic_time > 0");
  require(std::isfinite(recession_constant) && recession_constant >= 0.0,
          "sim.recession_constant >= 0");
}

}  // namespace slitflow
