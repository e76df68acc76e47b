#include "slitflow/condensation_front.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "slitflow/field_solver.hpp"
#include "slitflow/numerics/ode.hpp"

namespace slitflow {
namespace {

void require_level(double z, const char* who) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError(std::string(who) + ": z must lie in [0, 1]");
  }
}

double relative_change(double coarse, double fine) {
  const double scale = std::max(std::abs(coarse), std::abs(fine));
  if (scale == 0.0) return 0.0;
  return std::abs(fine - coarse) / scale;
}

}  // namespace

double delta(const MediumParams& medium, const FluidParams& fluid,
             const BoundaryConditions& bc, double x2, double t,
             double pressure_tol) {
  const double p = pressure(medium, fluid, bc, x2, t, pressure_tol);
  const double p_vs =
      saturation_pressure(fluid, bc, temperature(medium, bc, x2, t));
  return std::max(0.0, (p - p_vs) / p);
}

double delta(const MediumParams& medium, const FluidParams& fluid,
             const BoundaryConditions& bc, double x2, double t) {
  return delta(medium, fluid, bc, x2, t, default_pressure_tolerance(bc));
}

double delta_infinity(const MediumParams& medium, const FluidParams& fluid,
                      const BoundaryConditions& bc, double x2) {
  const double p = asymptotic_pressure(medium, fluid, bc, x2);
  return std::max(0.0, 1.0 - saturation_pressure_limit(fluid, bc) / p);
}

CondensationField::CondensationField(MediumParams medium, FluidParams fluid,
                                     BoundaryConditions bc,
                                     std::span<const double> x2_grid,
                                     double pressure_tol)
    : medium_(medium),
      fluid_(fluid),
      bc_(bc),
      pressure_tol_(pressure_tol),
      grid_(x2_grid.begin(), x2_grid.end()) {
  delta_inf_.reserve(grid_.size());
  for (double x : grid_) {
    delta_inf_.push_back(delta_infinity(medium_, fluid_, bc_, x));
  }
}

double CondensationField::operator()(double x2, double t) const {
  return delta(medium_, fluid_, bc_, x2, t, pressure_tol_);
}

numerics::QuadratureResult recession_speed(const MediumParams& medium,
                                           const FluidParams& fluid,
                                           const BoundaryConditions& bc,
                                           double x_front, double t,
                                           double tol) {
  if (!(x_front >= 0.0 && x_front <= medium.length())) {
    throw DomainError("recession_speed: front must lie in [0, L]");
  }
  const double p_tol = default_pressure_tolerance(bc);
  auto integrand = [&](double x2) {
    return delta(medium, fluid, bc, x2, t, p_tol);
  };
  return numerics::integrate(integrand, 0.0, x_front, tol);
}

double recession_speed_asymptotic(const MediumParams& medium,
                                  const FluidParams& fluid,
                                  const BoundaryConditions& bc,
                                  double x_front) {
  if (!(x_front >= 0.0 && x_front <= medium.length())) {
    throw DomainError("recession_speed_asymptotic: front must lie in [0, L]");
  }
  const double slope = 2.0 * bc.flux() * fluid.inlet_viscosity();
  const double p_vs = saturation_pressure_limit(fluid, bc);
  const double breakpoint = pressure_breakpoint(fluid, bc);
  // On the affine branch delta_inf is positive only upstream of the point
  // where p_E - slope * x reaches p_vs.
  const double positive_end = std::max(0.0, (bc.p_inlet() - p_vs) / slope);
  const double u = std::min({x_front, breakpoint, positive_end});

  // integral of 1 - p_vs / (p_E - slope x) over [0, u]
  double k0 = u + (p_vs / slope) * std::log1p(-slope * u / bc.p_inlet());
  k0 = std::max(0.0, k0);
  if (x_front > breakpoint) {
    k0 += (x_front - breakpoint) * std::max(0.0, plateau_constant(fluid, bc));
  }
  return k0;
}

double injection_speed(const BoundaryConditions& bc, double z) {
  require_level(z, "injection_speed");
  return bc.flux() * (z - z * z);
}

double plateau_constant(const FluidParams& fluid,
                        const BoundaryConditions& bc) {
  return 1.0 - saturation_pressure_limit(fluid, bc) / bc.p_outlet();
}

AsymptoticBound asymptotic_bound(const FluidParams& fluid,
                                 const BoundaryConditions& bc, double z) {
  require_level(z, "asymptotic_bound");
  AsymptoticBound out;
  out.plateau = plateau_constant(fluid, bc);
  out.applicable = out.plateau > 0.0;
  if (out.applicable) {
    out.value = injection_speed(bc, z) / out.plateau;
  }
  return out;
}

double majorant_solution(double w0, double c, double t) {
  if (c == 0.0) {
    return w0 * t;
  }
  return w0 * (-std::expm1(-c * t)) / c;
}

double majorant_trajectory(const FluidParams& fluid,
                           const BoundaryConditions& bc, double z, double t) {
  const auto bound = asymptotic_bound(fluid, bc, z);
  if (!bound.applicable) {
    throw DomainError("majorant_trajectory: bound not applicable (p_vs,inf >= p_S)");
  }
  if (!(t >= 0.0)) {
    throw DomainError("majorant_trajectory: requires t >= 0");
  }
  return majorant_solution(injection_speed(bc, z), bound.plateau, t);
}

FrontTrajectory advance_front(const MediumParams& medium,
                              const FluidParams& fluid,
                              const BoundaryConditions& bc,
                              const SimConfig& cfg, double z, double t_end) {
  cfg.validate();
  require_level(z, "advance_front");
  if (!(t_end > 0.0) || std::isinf(t_end)) {
    throw DomainError("advance_front: t_end must be finite and > 0");
  }

  const double length = medium.length();
  const double w0 = injection_speed(bc, z);
  const auto bound = asymptotic_bound(fluid, bc, z);

  FrontTrajectory base;
  base.z = z;
  base.bound = bound.value;
  base.bound_applicable = bound.applicable;
  base.plateau = bound.plateau;
  base.burn_in_time =
      cfg.burn_in_factor * length * length / medium.diffusivity();
  base.quad_tol = cfg.recession_tol;

  std::vector<double> stops;
  for (double t : cfg.output_times) {
    if (t > 0.0 && t < t_end) stops.push_back(t);
  }
  stops.push_back(t_end);
  const bool record_every_step = cfg.output_times.empty();

  double max_quad_err = 0.0;
  auto k0_at = [&](double x, double t) {
    const double front = std::clamp(x, 0.0, length);
    switch (cfg.recession_model) {
      case RecessionModel::full: {
        const auto r =
            recession_speed(medium, fluid, bc, front, t, cfg.recession_tol);
        max_quad_err = std::max(max_quad_err, r.err_estimate);
        return r.value;
      }
      case RecessionModel::asymptotic:
        return recession_speed_asymptotic(medium, fluid, bc, front);
      case RecessionModel::constant:
        return cfg.recession_constant * front;
      case RecessionModel::none:
        return 0.0;
    }
    return 0.0;
  };
  const numerics::OdeRhs rhs = [&](double t, double x) {
    return w0 - k0_at(x, t);
  };
  const numerics::StateProjection clamp = [length](double x) {
    return std::clamp(x, 0.0, length);
  };
  auto record = [&](FrontTrajectory& tr, double t, double x) {
    const double k0 = k0_at(x, t);
    double v = w0 - k0;
    if ((x >= length && v > 0.0) || (x <= 0.0 && v < 0.0)) v = 0.0;
    tr.samples.push_back({t, x, k0, v});
  };

  auto integrate_once = [&](double dt, FrontTrajectory& tr) {
    numerics::OdeStepperConfig ode{dt, cfg.ode_rel_tol, cfg.max_steps};
    double t = 0.0;
    double x = 0.0;
    record(tr, t, x);
    for (double stop : stops) {
      const auto path = numerics::ode_solve(rhs, x, t, stop, ode, clamp);
      if (record_every_step) {
        for (std::size_t i = 1; i < path.size(); ++i) {
          record(tr, path[i].t, path[i].x);
        }
      } else {
        record(tr, path.back().t, path.back().x);
      }
      t = path.back().t;
      x = path.back().x;
    }
  };

  double dt = cfg.dt;
  FrontTrajectory coarse = base;
  try {
    integrate_once(dt, coarse);
  } catch (const NumericError& e) {
    throw SimulationError(std::string("front integration failed: ") + e.what(),
                          coarse);
  }
  for (std::size_t h = 0; h <= cfg.max_halvings; ++h) {
    FrontTrajectory fine = base;
    try {
      integrate_once(0.5 * dt, fine);
    } catch (const NumericError& e) {
      throw SimulationError(
          std::string("front integration failed: ") + e.what(), coarse);
    }
    const double change = relative_change(coarse.samples.back().x2_front,
                                          fine.samples.back().x2_front);
    fine.dt_used = 0.5 * dt;
    fine.halving_delta = change;
    fine.halvings = h + 1;
    fine.max_quad_err = max_quad_err;
    if (change < cfg.ode_rel_tol) {
      return fine;
    }
    coarse = std::move(fine);
    dt *= 0.5;
  }
  throw SimulationError("step-halving did not reach sim.ode_rel_tol after " +
                            std::to_string(cfg.max_halvings + 1) +
                            " halvings (step underflow)",
                        coarse);
}

std::string_view to_string(BoundCheck::Status status) {
  switch (status) {
    case BoundCheck::Status::pass:
      return "pass";
    case BoundCheck::Status::fail:
      return "fail";
    case BoundCheck::Status::not_applicable:
      return "not_applicable";
    case BoundCheck::Status::skipped:
      return "skipped";
  }
  return "skipped";
}

BoundCheck check_bound_domination(const FrontTrajectory& trajectory,
                                  const FluidParams& fluid,
                                  const BoundaryConditions& bc,
                                  double bound_tol) {
  BoundCheck out;
  if (!trajectory.bound_applicable) {
    out.status = BoundCheck::Status::not_applicable;
    out.detail = "bound not applicable: p_vs,inf >= p_S";
    return out;
  }
  const double w0 = injection_speed(bc, trajectory.z);
  const double c = plateau_constant(fluid, bc);
  bool ok = true;
  for (const auto& s : trajectory.samples) {
    if (s.x2_front > trajectory.bound * (1.0 + bound_tol)) {
      ok = false;
      out.detail = "front " + std::to_string(s.x2_front) + " m exceeds bound " +
                   std::to_string(trajectory.bound) + " m at t = " +
                   std::to_string(s.t) + " s";
      break;
    }
    if (s.t < trajectory.burn_in_time || s.t == 0.0) continue;
    const double majorant = majorant_solution(w0, c, s.t);
    ++out.checked_samples;
    if (majorant > 0.0) {
      out.max_majorant_ratio =
          std::max(out.max_majorant_ratio, s.x2_front / majorant);
    }
    if (s.x2_front > majorant * (1.0 + bound_tol)) {
      ok = false;
      out.detail = "front " + std::to_string(s.x2_front) +
                   " m exceeds majorant " + std::to_string(majorant) +
                   " m at t = " + std::to_string(s.t) + " s";
      break;
    }
  }
  if (!ok) {
    out.status = BoundCheck::Status::fail;
  } else if (out.checked_samples == 0) {
    out.status = BoundCheck::Status::skipped;
    out.detail = "no sample after burn-in time " +
                 std::to_string(trajectory.burn_in_time) + " s";
  } else {
    out.status = BoundCheck::Status::pass;
  }
  return out;
}

}  // namespace slitflow
