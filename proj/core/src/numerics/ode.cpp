#include "slitflow/numerics/ode.hpp"

#include <cmath>
#include <string>

namespace slitflow::numerics {

void OdeStepperConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvariantError("OdeStepperConfig: dt > 0");
  }
  if (!(rel_tol > 0.0)) {
    throw InvariantError("OdeStepperConfig: rel_tol > 0");
  }
  if (max_steps == 0) {
    throw InvariantError("OdeStepperConfig: max_steps > 0");
  }
}

double rk4_step(const OdeRhs& rhs, double t, double x, double dt) {
  const double half = 0.5 * dt;
  const double k1 = rhs(t, x);
  const double k2 = rhs(t + half, x + half * k1);
  const double k3 = rhs(t + half, x + half * k2);
  const double k4 = rhs(t + dt, x + dt * k3);
  return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::vector<OdeSample> ode_solve(const OdeRhs& rhs, double x0, double t0,
                                 double t_end, const OdeStepperConfig& cfg,
                                 const StateProjection& project) {
  cfg.validate();
  if (!(t_end >= t0)) {
    throw DomainError("ode_solve: requires t_end >= t0");
  }
  const double span = t_end - t0;
  // A remainder below this fraction of dt is absorbed into the last full step.
  constexpr double snap = 1e-9;
  double full = std::floor(span / cfg.dt);
  double remainder = span - full * cfg.dt;
  if (remainder > (1.0 - snap) * cfg.dt) {
    full += 1.0;
    remainder = 0.0;
  }
  const bool tail = remainder > snap * cfg.dt;
  const double steps = full + (tail ? 1.0 : 0.0);
  if (steps > static_cast<double>(cfg.max_steps)) {
    throw OdeError("ode_solve: " + std::to_string(steps) +
                   " steps needed, max_steps = " +
                   std::to_string(cfg.max_steps));
  }

  const auto n_full = static_cast<std::size_t>(full);
  std::vector<OdeSample> out;
  out.reserve(n_full + 2);
  out.push_back({t0, x0});
  double x = x0;
  for (std::size_t k = 0; k < n_full; ++k) {
    const double t = t0 + static_cast<double>(k) * cfg.dt;
    double t_next = t0 + static_cast<double>(k + 1) * cfg.dt;
    if (!tail && k + 1 == n_full) {
      t_next = t_end;
    }
    x = rk4_step(rhs, t, x, t_next - t);
    if (project) x = project(x);
    out.push_back({t_next, x});
  }
  if (tail) {
    const double t = out.back().t;
    x = rk4_step(rhs, t, x, t_end - t);
    if (project) x = project(x);
    out.push_back({t_end, x});
  }
  return out;
}

}  // namespace slitflow::numerics
