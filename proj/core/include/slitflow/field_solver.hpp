#pragma once

// Order-zero flow fields in the slit: the parabolic transverse velocity
// profile, the driving pressure obtained by integrating the viscosity along
// the pore, and its long-time affine limit.

#include <cstddef>
#include <span>
#include <vector>

#include "slitflow/numerics/quadrature.hpp"
#include "slitflow/physics.hpp"

namespace slitflow {

/// Flux carried by the velocity profile q (z - z^2) across z in [0, 1],
/// as a fraction of q. The inlet condition prescribes a unit fraction; the
/// profile is kept exactly as derived and this factor is reported alongside.
inline constexpr double kProfileFluxFraction = 1.0 / 6.0;

struct PressureProfile {
  std::vector<double> x2_grid;
  std::vector<double> p_values;
  double t = 0.0;
  /// Sum of the quadrature error estimates over all grid segments.
  double err_estimate = 0.0;
};

struct VelocitySample {
  double x2 = 0.0;
  double z = 0.0;
  double v2 = 0.0;
};

struct ResidualResult {
  double value = 0.0;
  /// Step along x2 actually used (h * L).
  double x_step = 0.0;
  /// Set when h is small enough for rounding to dominate the second
  /// difference in z.
  bool cancellation_warning = false;
};

/// n equally spaced points on [0, L] with both ends included (n >= 2).
std::vector<double> uniform_grid(double length, std::size_t n);

/// Horizontal velocity v2 = q (z - z^2) - k0. Throws DomainError for z
/// outside [0, 1] or k0 < 0.
double velocity(const BoundaryConditions& bc, double z, double k0);

/// Convenience wrapper bundling position, level and velocity.
VelocitySample velocity_sample(const BoundaryConditions& bc, double x2,
                               double z, double k0);

/// Default absolute pressure tolerance, 1e-9 * p_E.
double default_pressure_tolerance(const BoundaryConditions& bc);

/// 2 q * integral of eta(Θ(ζ, t)) over [a, b]: the pressure lost between
/// two stations before any outlet clamping.
numerics::QuadratureResult pressure_drop(const MediumParams& medium,
                                         const FluidParams& fluid,
                                         const BoundaryConditions& bc,
                                         double a, double b, double t,
                                         double tol);

/// Driving pressure p_i(x2, t) = max(p_S, p_E - pressure_drop(0, x2)).
/// value carries the clamped pressure; err_estimate that of the quadrature.
/// Throws DomainError for x2 outside [0, L] or t < 0, QuadratureError when
/// the quadrature cannot meet tol.
numerics::QuadratureResult pressure_estimate(const MediumParams& medium,
                                             const FluidParams& fluid,
                                             const BoundaryConditions& bc,
                                             double x2, double t, double tol);

double pressure(const MediumParams& medium, const FluidParams& fluid,
                const BoundaryConditions& bc, double x2, double t, double tol);
double pressure(const MediumParams& medium, const FluidParams& fluid,
                const BoundaryConditions& bc, double x2, double t);

/// Pressure on an ordered grid, integrating segment by segment so the
/// profile is non-increasing by construction.
PressureProfile pressure_profile(const MediumParams& medium,
                                 const FluidParams& fluid,
                                 const BoundaryConditions& bc,
                                 std::span<const double> x2_grid, double t,
                                 double tol);

/// Position where the long-time affine pressure reaches p_S:
/// (p_E - p_S) / (2 q eta_E).
double pressure_breakpoint(const FluidParams& fluid,
                           const BoundaryConditions& bc);

/// Long-time pressure: p_E - 2 q eta_E x2 up to the breakpoint, p_S beyond.
double asymptotic_pressure(const MediumParams& medium, const FluidParams& fluid,
                           const BoundaryConditions& bc, double x2);

/// Centered finite-difference value of
///   -d/dz (eta dv2/dz) + dp/dx2
/// at (x2, z, t), with step h in z and h * L in x2. The pressure difference
/// across the x2 stencil is the pressure drop between the two stations,
/// which avoids subtracting two nearly equal absolute pressures.
///
/// The stencil must lie inside the pore, inside [0, 1] in z, and upstream of
/// the point where the pressure is clamped at p_S; otherwise DomainError.
ResidualResult momentum_residual(const MediumParams& medium,
                                 const FluidParams& fluid,
                                 const BoundaryConditions& bc, double x2,
                                 double z, double t, double h,
                                 double k0 = 0.0);

}  // namespace slitflow
