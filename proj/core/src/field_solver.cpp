#include "slitflow/field_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slitflow {
namespace {

void require_station(const MediumParams& medium, double x2, double t,
                     const char* who) {
  if (!(x2 >= 0.0 && x2 <= medium.length())) {
    throw DomainError(std::string(who) + ": x2 must lie in [0, L]");
  }
  if (!(t >= 0.0) || std::isinf(t)) {
    throw DomainError(std::string(who) + ": t must be finite and >= 0");
  }
}

}  // namespace

std::vector<double> uniform_grid(double length, std::size_t n) {
  if (n < 2) {
    throw DomainError("uniform_grid: need at least two points");
  }
  std::vector<double> grid(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = length * (static_cast<double>(i) / last);
  }
  grid.back() = length;
  return grid;
}

double velocity(const BoundaryConditions& bc, double z, double k0) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw DomainError("velocity: z must lie in [0, 1]");
  }
  if (!(k0 >= 0.0)) {
    throw DomainError("velocity: k0 must be >= 0");
  }
  return bc.flux() * (z - z * z) - k0;
}

VelocitySample velocity_sample(const BoundaryConditions& bc, double x2,
                               double z, double k0) {
  return {x2, z, velocity(bc, z, k0)};
}

double default_pressure_tolerance(const BoundaryConditions& bc) {
  return 1e-9 * bc.p_inlet();
}

numerics::QuadratureResult pressure_drop(const MediumParams& medium,
                                         const FluidParams& fluid,
                                         const BoundaryConditions& bc,
                                         double a, double b, double t,
                                         double tol) {
  const double scale = 2.0 * bc.flux();
  auto integrand = [&](double zeta) {
    return viscosity(fluid, bc, temperature(medium, bc, zeta, t));
  };
  auto r = numerics::integrate(integrand, a, b, tol / scale);
  r.value *= scale;
  r.err_estimate *= scale;
  return r;
}

numerics::QuadratureResult pressure_estimate(const MediumParams& medium,
                                             const FluidParams& fluid,
                                             const BoundaryConditions& bc,
                                             double x2, double t, double tol) {
  require_station(medium, x2, t, "pressure");
  auto r = pressure_drop(medium, fluid, bc, 0.0, x2, t, tol);
  r.value = std::max(bc.p_outlet(), bc.p_inlet() - r.value);
  return r;
}

double pressure(const MediumParams& medium, const FluidParams& fluid,
                const BoundaryConditions& bc, double x2, double t, double tol) {
  return pressure_estimate(medium, fluid, bc, x2, t, tol).value;
}

double pressure(const MediumParams& medium, const FluidParams& fluid,
                const BoundaryConditions& bc, double x2, double t) {
  return pressure(medium, fluid, bc, x2, t, default_pressure_tolerance(bc));
}

PressureProfile pressure_profile(const MediumParams& medium,
                                 const FluidParams& fluid,
                                 const BoundaryConditions& bc,
                                 std::span<const double> x2_grid, double t,
                                 double tol) {
  PressureProfile profile;
  profile.t = t;
  profile.x2_grid.assign(x2_grid.begin(), x2_grid.end());
  profile.p_values.reserve(x2_grid.size());
  if (x2_grid.empty()) {
    return profile;
  }
  for (std::size_t i = 0; i < x2_grid.size(); ++i) {
    require_station(medium, x2_grid[i], t, "pressure_profile");
    if (i > 0 && x2_grid[i] < x2_grid[i - 1]) {
      throw DomainError("pressure_profile: grid must be ordered");
    }
  }
  const double segment_tol =
      tol / static_cast<double>(std::max<std::size_t>(1, x2_grid.size() - 1));
  double drop = 0.0;
  if (x2_grid.front() > 0.0) {
    const auto r =
        pressure_drop(medium, fluid, bc, 0.0, x2_grid.front(), t, segment_tol);
    drop = r.value;
    profile.err_estimate += r.err_estimate;
  }
  profile.p_values.push_back(std::max(bc.p_outlet(), bc.p_inlet() - drop));
  for (std::size_t i = 1; i < x2_grid.size(); ++i) {
    const auto r = pressure_drop(medium, fluid, bc, x2_grid[i - 1], x2_grid[i],
                                 t, segment_tol);
    drop += r.value;
    profile.err_estimate += r.err_estimate;
    profile.p_values.push_back(std::max(bc.p_outlet(), bc.p_inlet() - drop));
  }
  return profile;
}

double pressure_breakpoint(const FluidParams& fluid,
                           const BoundaryConditions& bc) {
  return (bc.p_inlet() - bc.p_outlet()) /
         (2.0 * bc.flux() * fluid.inlet_viscosity());
}

double asymptotic_pressure(const MediumParams& medium, const FluidParams& fluid,
                           const BoundaryConditions& bc, double x2) {
  if (!(x2 >= 0.0 && x2 <= medium.length())) {
    throw DomainError("asymptotic_pressure: x2 must lie in [0, L]");
  }
  if (x2 > pressure_breakpoint(fluid, bc)) {
    return bc.p_outlet();
  }
  const double affine =
      bc.p_inlet() - 2.0 * bc.flux() * fluid.inlet_viscosity() * x2;
  return std::max(bc.p_outlet(), affine);
}

ResidualResult momentum_residual(const MediumParams& medium,
                                 const FluidParams& fluid,
                                 const BoundaryConditions& bc, double x2,
                                 double z, double t, double h, double k0) {
  if (!(h > 0.0)) {
    throw DomainError("momentum_residual: step must be positive");
  }
  ResidualResult out;
  out.x_step = h * medium.length();
  const double hx = out.x_step;
  if (!(z - h >= 0.0 && z + h <= 1.0)) {
    throw DomainError("momentum_residual: z stencil leaves [0, 1]");
  }
  if (!(x2 - hx >= 0.0 && x2 + hx <= medium.length())) {
    throw DomainError("momentum_residual: x2 stencil leaves [0, L]");
  }
  if (!(t > 0.0)) {
    throw DomainError("momentum_residual: requires t > 0");
  }

  // Second differences lose about eps / h^2 relative accuracy; below
  // eps^(1/4) that exceeds the O(h^2) truncation term.
  out.cancellation_warning =
      h < std::pow(std::numeric_limits<double>::epsilon(), 0.25);

  const double eta = viscosity(fluid, bc, temperature(medium, bc, x2, t));
  const double v_lo = velocity(bc, z - h, k0);
  const double v_mid = velocity(bc, z, k0);
  const double v_hi = velocity(bc, z + h, k0);
  const double flux_hi = eta * (v_hi - v_mid) / h;
  const double flux_lo = eta * (v_mid - v_lo) / h;
  const double viscous = -(flux_hi - flux_lo) / h;

  const double upstream_drop =
      pressure_drop(medium, fluid, bc, 0.0, x2 + hx, t,
                    default_pressure_tolerance(bc))
          .value;
  if (bc.p_inlet() - upstream_drop <= bc.p_outlet()) {
    throw DomainError(
        "momentum_residual: stencil reaches the region clamped at p_S");
  }
  const double local_scale =
      2.0 * bc.flux() * fluid.inlet_viscosity() * 2.0 * hx;
  const double drop =
      pressure_drop(medium, fluid, bc, x2 - hx, x2 + hx, t, 1e-13 * local_scale)
          .value;
  const double dp_dx = -drop / (2.0 * hx);

  out.value = viscous + dp_dx;
  return out;
}

}  // namespace slitflow
