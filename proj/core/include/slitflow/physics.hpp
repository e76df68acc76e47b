#pragma once

// Closed-form physical fields of the injection problem: conductive
// temperature in the semi-infinite medium, Clapeyron saturation pressure and
// Sutherland viscosity. All quantities are SI (K, Pa, Pa*s, m, s).

#include "slitflow/errors.hpp"

namespace slitflow {

/// Pore geometry and thermal diffusivity of the solid matrix.
class MediumParams {
 public:
  /// Throws InvariantError unless length > 0 and diffusivity > 0.
  MediumParams(double length, double diffusivity);

  double length() const noexcept { return length_; }
  double diffusivity() const noexcept { return diffusivity_; }

 private:
  double length_;
  double diffusivity_;
};

/// Constants of the condensable injected fluid.
class FluidParams {
 public:
  /// clapeyron_constant, boiling_pressure and inlet_viscosity must be > 0;
  /// sutherland_constant must be >= 0.
  FluidParams(double clapeyron_constant, double boiling_pressure,
              double inlet_viscosity, double sutherland_constant);

  /// Clapeyron constant (K), depends on molar mass and latent heat.
  double clapeyron_constant() const noexcept { return clapeyron_constant_; }
  /// Pressure at which the fluid boils at the outlet temperature (Pa).
  double boiling_pressure() const noexcept { return boiling_pressure_; }
  /// Viscosity at the inlet temperature (Pa*s).
  double inlet_viscosity() const noexcept { return inlet_viscosity_; }
  /// Sutherland constant (K).
  double sutherland_constant() const noexcept { return sutherland_constant_; }

 private:
  double clapeyron_constant_;
  double boiling_pressure_;
  double inlet_viscosity_;
  double sutherland_constant_;
};

/// Inlet/outlet driving data. The outlet temperature is also the initial
/// temperature of the medium and the reference of the saturation law.
class BoundaryConditions {
 public:
  /// Requires theta_inlet > theta_outlet > 0, p_inlet > p_outlet > 0 and
  /// flux > 0.
  BoundaryConditions(double theta_inlet, double theta_outlet, double p_inlet,
                     double p_outlet, double flux);

  double theta_inlet() const noexcept { return theta_inlet_; }
  double theta_outlet() const noexcept { return theta_outlet_; }
  double p_inlet() const noexcept { return p_inlet_; }
  double p_outlet() const noexcept { return p_outlet_; }
  double flux() const noexcept { return flux_; }

 private:
  double theta_inlet_;
  double theta_outlet_;
  double p_inlet_;
  double p_outlet_;
  double flux_;
};

/// Conductive temperature Θ(x2, t) with Θ(0, t) = theta_inlet and
/// Θ(x2, 0) = theta_outlet:
///
///   Θ = Θ_S + (Θ_E - Θ_S) erfc(x2 / (2 sqrt(K t)))
///
/// The corner (x2 = 0, t = 0) returns the inlet value. The semi-infinite
/// solution is used on the whole pore; no outlet thermal condition is applied.
/// Throws DomainError for negative x2 or t.
double temperature(const MediumParams& medium, const BoundaryConditions& bc,
                   double x2, double t);

/// Pointwise limit of temperature() as t -> infinity, for every x2.
double temperature_limit(const BoundaryConditions& bc);

/// Clapeyron law referenced at the outlet temperature:
/// p_vs = pi_S exp(lambda (1/Θ_S - 1/theta)). Throws DomainError if theta <= 0.
double saturation_pressure(const FluidParams& fluid,
                           const BoundaryConditions& bc, double theta);

/// saturation_pressure() at the inlet temperature, i.e. its long-time limit.
double saturation_pressure_limit(const FluidParams& fluid,
                                 const BoundaryConditions& bc);

/// Sutherland law referenced at the inlet temperature:
/// eta = eta_E (theta/Θ_E)^1.5 (Θ_E + psi)/(theta + psi).
/// Depends on position only through theta. Throws DomainError if theta <= 0.
double viscosity(const FluidParams& fluid, const BoundaryConditions& bc,
                 double theta);

}  // namespace slitflow
