#pragma once

// Condensation fraction, interface recession and the moving-front equation
//
//   dx2/dt = w0(z) - k0(z, t),   w0(z) = q (z - z^2),
//   k0(z, t) = integral of delta(ζ, t) over [0, x2(z, t)],
//
// together with the long-time arrest bound w0(z) / (1 - p_vs,inf / p_S).

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "slitflow/errors.hpp"
#include "slitflow/numerics/quadrature.hpp"
#include "slitflow/physics.hpp"
#include "slitflow/sim_config.hpp"

namespace slitflow {

/// Fraction of vapour condensing at (x2, t):
/// max(0, (p_i - p_vs) / p_i), with p_vs taken at the local temperature.
/// Always in [0, 1).
double delta(const MediumParams& medium, const FluidParams& fluid,
             const BoundaryConditions& bc, double x2, double t,
             double pressure_tol);
double delta(const MediumParams& medium, const FluidParams& fluid,
             const BoundaryConditions& bc, double x2, double t);

/// Long-time condensation profile built from the affine asymptotic pressure
/// and the inlet saturation pressure, clamped below at 0.
double delta_infinity(const MediumParams& medium, const FluidParams& fluid,
                      const BoundaryConditions& bc, double x2);

/// Evaluator of delta with the long-time profile tabulated on a grid.
class CondensationField {
 public:
  CondensationField(MediumParams medium, FluidParams fluid,
                    BoundaryConditions bc, std::span<const double> x2_grid,
                    double pressure_tol);

  double operator()(double x2, double t) const;

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& delta_inf() const noexcept { return delta_inf_; }

 private:
  MediumParams medium_;
  FluidParams fluid_;
  BoundaryConditions bc_;
  double pressure_tol_;
  std::vector<double> grid_;
  std::vector<double> delta_inf_;
};

/// k0 = integral of delta(·, t) over [0, x_front], by adaptive quadrature to
/// absolute tolerance tol. Only the wetted region is sampled.
numerics::QuadratureResult recession_speed(const MediumParams& medium,
                                           const FluidParams& fluid,
                                           const BoundaryConditions& bc,
                                           double x_front, double t,
                                           double tol);

/// k0 with delta replaced by delta_infinity, in closed form.
double recession_speed_asymptotic(const MediumParams& medium,
                                  const FluidParams& fluid,
                                  const BoundaryConditions& bc,
                                  double x_front);

/// Advance speed of the level z without condensation, w0 = q (z - z^2).
double injection_speed(const BoundaryConditions& bc, double z);

/// Plateau condensation fraction c = 1 - p_vs,inf / p_S. May be <= 0.
double plateau_constant(const FluidParams& fluid, const BoundaryConditions& bc);

struct AsymptoticBound {
  /// w0(z) / c when applicable, +infinity otherwise.
  double value = std::numeric_limits<double>::infinity();
  bool applicable = false;
  double plateau = 0.0;
};

/// Long-time bound on the front position; applicable only when c > 0.
AsymptoticBound asymptotic_bound(const FluidParams& fluid,
                                 const BoundaryConditions& bc, double z);

/// Solution of xi = w0 t - c * integral of xi over [0, t], i.e.
/// (w0 / c)(1 - exp(-c t)); tends to w0 t as c -> 0.
double majorant_solution(double w0, double c, double t);

/// majorant_solution for level z with the plateau constant. Throws
/// DomainError when the bound is not applicable.
double majorant_trajectory(const FluidParams& fluid,
                           const BoundaryConditions& bc, double z, double t);

struct FrontState {
  double t = 0.0;
  double x2_front = 0.0;
  double k0 = 0.0;
  /// dx2/dt of the recorded state (zero once the front sits at L).
  double velocity = 0.0;
};

struct FrontTrajectory {
  double z = 0.0;
  std::vector<FrontState> samples;
  double bound = std::numeric_limits<double>::infinity();
  bool bound_applicable = false;
  double plateau = 0.0;
  double burn_in_time = 0.0;
  /// Step of the accepted run and relative change of x2(t_end) against the
  /// run with twice that step.
  double dt_used = 0.0;
  double halving_delta = 0.0;
  std::size_t halvings = 0;
  /// Largest k0 quadrature error estimate met, and the tolerance requested.
  double max_quad_err = 0.0;
  double quad_tol = 0.0;
};

/// Raised when the front integration fails; keeps what was computed.
class SimulationError : public NumericError {
 public:
  SimulationError(const std::string& what, FrontTrajectory partial)
      : NumericError(what), partial_(std::move(partial)) {}
  const FrontTrajectory& partial() const noexcept { return partial_; }

 private:
  FrontTrajectory partial_;
};

/// Integrates the front of level z from x2 = 0 at t = 0 up to t_end with
/// fixed-step RK4, halving the step until x2(t_end) changes by less than
/// cfg.ode_rel_tol. The front is clamped to [0, L].
FrontTrajectory advance_front(const MediumParams& medium,
                              const FluidParams& fluid,
                              const BoundaryConditions& bc,
                              const SimConfig& cfg, double z, double t_end);

struct BoundCheck {
  enum class Status { pass, fail, not_applicable, skipped };
  Status status = Status::skipped;
  /// Largest x2 / majorant over samples after burn-in.
  double max_majorant_ratio = 0.0;
  std::size_t checked_samples = 0;
  std::string detail;
};

std::string_view to_string(BoundCheck::Status status);

/// Verifies that every sample stays below bound * (1 + bound_tol) and that
/// samples after the burn-in time stay below the majorant trajectory.
BoundCheck check_bound_domination(const FrontTrajectory& trajectory,
                                  const FluidParams& fluid,
                                  const BoundaryConditions& bc,
                                  double bound_tol);

}  // namespace slitflow
