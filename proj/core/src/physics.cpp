#include "slitflow/physics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slitflow/numerics/erfc.hpp"

namespace slitflow {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require(bool ok, const char* invariant) {
  if (!ok) {
    throw InvariantError(std::string("invariant violated: ") + invariant);
  }
}

void require_temperature(double theta, const char* who) {
  if (!positive(theta)) {
    throw DomainError(std::string(who) + ": temperature must be > 0 K");
  }
}

}  // namespace

MediumParams::MediumParams(double length, double diffusivity)
    : length_(length), diffusivity_(diffusivity) {
  require(positive(length_), "L > 0");
  require(positive(diffusivity_), "K > 0");
}

FluidParams::FluidParams(double clapeyron_constant, double boiling_pressure,
                         double inlet_viscosity, double sutherland_constant)
    : clapeyron_constant_(clapeyron_constant),
      boiling_pressure_(boiling_pressure),
      inlet_viscosity_(inlet_viscosity),
      sutherland_constant_(sutherland_constant) {
  require(positive(clapeyron_constant_), "lambda_i > 0");
  require(positive(boiling_pressure_), "pi_S > 0");
  require(positive(inlet_viscosity_), "eta_E > 0");
  require(std::isfinite(sutherland_constant_) && sutherland_constant_ >= 0.0,
          "psi >= 0");
}

BoundaryConditions::BoundaryConditions(double theta_inlet, double theta_outlet,
                                       double p_inlet, double p_outlet,
                                       double flux)
    : theta_inlet_(theta_inlet),
      theta_outlet_(theta_outlet),
      p_inlet_(p_inlet),
      p_outlet_(p_outlet),
      flux_(flux) {
  require(positive(theta_outlet_), "theta_S > 0");
  require(positive(theta_inlet_) && theta_inlet_ > theta_outlet_,
          "theta_E > theta_S");
  require(positive(p_outlet_), "p_S > 0");
  require(positive(p_inlet_) && p_inlet_ > p_outlet_, "p_E > p_S");
  require(positive(flux_), "q > 0");
}

double temperature(const MediumParams& medium, const BoundaryConditions& bc,
                   double x2, double t) {
  if (!(x2 >= 0.0) || !(t >= 0.0) || std::isinf(x2) || std::isinf(t)) {
    throw DomainError("temperature: requires finite x2 >= 0 and t >= 0");
  }
  if (x2 == 0.0) {
    return bc.theta_inlet();
  }
  if (t == 0.0) {
    return bc.theta_outlet();
  }
  const double span = bc.theta_inlet() - bc.theta_outlet();
  const double arg = x2 / (2.0 * std::sqrt(medium.diffusivity() * t));
  const double theta = bc.theta_outlet() + span * numerics::erfc(arg);
  return std::clamp(theta, bc.theta_outlet(), bc.theta_inlet());
}

double temperature_limit(const BoundaryConditions& bc) {
  return bc.theta_inlet();
}

double saturation_pressure(const FluidParams& fluid,
                           const BoundaryConditions& bc, double theta) {
  require_temperature(theta, "saturation_pressure");
  const double exponent =
      fluid.clapeyron_constant() * (1.0 / bc.theta_outlet() - 1.0 / theta);
  return fluid.boiling_pressure() * std::exp(exponent);
}

double saturation_pressure_limit(const FluidParams& fluid,
                                 const BoundaryConditions& bc) {
  return saturation_pressure(fluid, bc, bc.theta_inlet());
}

double viscosity(const FluidParams& fluid, const BoundaryConditions& bc,
                 double theta) {
  require_temperature(theta, "viscosity");
  const double theta_e = bc.theta_inlet();
  const double psi = fluid.sutherland_constant();
  if (theta == theta_e) {
    return fluid.inlet_viscosity();
  }
  const double ratio = theta / theta_e;
  return fluid.inlet_viscosity() * ratio * std::sqrt(ratio) *
         (theta_e + psi) / (theta + psi);
}

}  // namespace slitflow
