#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "common/reference.hpp"
#include "oracles/simpson_oracle.hpp"
#include "slitflow/field_solver.hpp"

namespace {

using namespace slitflow;
using namespace slitflow::testing;

TEST(Velocity, Profile) {
  const auto bc = reference_bc();
  EXPECT_EQ(velocity(bc, 0.0, 0.0), 0.0);
  EXPECT_EQ(velocity(bc, 1.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(velocity(bc, 0.5, 0.0), bc.flux() / 4.0);
  EXPECT_NEAR(velocity(bc, 0.5, 2e-4), 5e-5, 1e-18);
  // Wall condition: v2 = -k0 on z in {0, 1}.
  EXPECT_EQ(velocity(bc, 0.0, 3e-5), -3e-5);
  EXPECT_EQ(velocity_sample(bc, 1e-4, 1.0, 3e-5).v2, -3e-5);
  EXPECT_THROW(velocity(bc, 1.5, 0.0), DomainError);
  EXPECT_THROW(velocity(bc, 0.5, -1.0), DomainError);
}

TEST(Velocity, FluxFractionOfProfile) {
  const auto bc = reference_bc();
  const double flux = oracle::simpson_fixed(
      [&](double z) { return velocity(bc, z, 0.0); }, 0.0, 1.0, 1000);
  EXPECT_NEAR(flux, kProfileFluxFraction * bc.flux(), 1e-18);
}

TEST(Pressure, InletValue) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = reference_bc();
  for (double t : {0.0, 1.0, 1e6}) {
    EXPECT_EQ(pressure(m, f, bc, 0.0, t), bc.p_inlet());
  }
}

TEST(Pressure, IsothermalProfileIsAffine) {
  // At huge t the temperature equals Θ_E to ~1e-9 relative on this short pore.
  const MediumParams m(1e-3, 1.0);
  const auto f = reference_fluid();
  const auto bc = steep_bc();
  const double slope = 2.0 * bc.flux() * f.inlet_viscosity();
  for (double x : {1e-4, 2e-4, 4e-4}) {
    EXPECT_NEAR(pressure(m, f, bc, x, 1e12), bc.p_inlet() - slope * x,
                1e-6 * (bc.p_inlet() - bc.p_outlet()));
  }
  // Past the breakpoint the outlet clamp applies.
  EXPECT_EQ(pressure(m, f, bc, 9e-4, 1e12), bc.p_outlet());
}

TEST(Pressure, MatchesBruteForceSimpson) {
  const MediumParams m(0.1, 1e-6);
  const auto f = reference_fluid();
  const auto bc = hot_bc();
  const double t = 1000.0, x = 0.05;
  const double drop_oracle =
      2.0 * bc.flux() *
      oracle::simpson_fixed(
          [&](double s) { return viscosity(f, bc, temperature(m, bc, s, t)); },
          0.0, x, 1'000'000);
  EXPECT_NEAR(drop_oracle, kHotPressureDrop, 1e-20);
  const double tol = 1e-15;
  const auto r = pressure_drop(m, f, bc, 0.0, x, t, tol);
  EXPECT_NEAR(r.value, drop_oracle, tol);
  EXPECT_LE(r.err_estimate, tol);
  EXPECT_EQ(pressure(m, f, bc, x, t), bc.p_inlet() - r.value);
}

TEST(Pressure, NonIncreasingOnRandomGrids) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = steep_bc();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(0.0, 1e-3);
  std::uniform_real_distribution<double> ut(-2.0, 4.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> grid(30);
    for (auto& x : grid) x = ux(rng);
    std::sort(grid.begin(), grid.end());
    const double t = std::pow(10.0, ut(rng));
    const auto profile = pressure_profile(m, f, bc, grid, t, 1e-6);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      EXPECT_LE(profile.p_values[i], profile.p_values[i - 1]);
      EXPECT_GE(profile.p_values[i], bc.p_outlet());
    }
    // Pointwise evaluation agrees with the cumulative profile.
    EXPECT_NEAR(pressure(m, f, bc, grid[15], t, 1e-6), profile.p_values[15],
                1e-5);
  }
}

TEST(Pressure, DomainAndQuadratureErrors) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = reference_bc();
  EXPECT_THROW(pressure(m, f, bc, 2e-3, 1.0), DomainError);
  EXPECT_THROW(pressure(m, f, bc, 1e-4, -1.0), DomainError);
}

TEST(AsymptoticPressure, PiecewiseAffine) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = steep_bc();
  const double b = pressure_breakpoint(f, bc);
  EXPECT_NEAR(b, 0.5e-3, 1e-15);
  EXPECT_EQ(asymptotic_pressure(m, f, bc, 0.0), bc.p_inlet());
  EXPECT_NEAR(asymptotic_pressure(m, f, bc, b), bc.p_outlet(), 1e-9);
  EXPECT_EQ(asymptotic_pressure(m, f, bc, 0.8e-3), bc.p_outlet());
  double last = bc.p_inlet();
  for (const double x : uniform_grid(m.length(), 1001)) {
    const double p = asymptotic_pressure(m, f, bc, x);
    EXPECT_LE(p, last);
    EXPECT_GE(p, bc.p_outlet());
    last = p;
  }
}

TEST(AsymptoticPressure, LongTimeLimitOfPressure) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  for (const auto& bc : {reference_bc(), steep_bc()}) {
    double worst = 0.0;
    for (const double x : uniform_grid(m.length(), 101)) {
      worst = std::max(worst, std::abs(pressure(m, f, bc, x, 1e10) -
                                       asymptotic_pressure(m, f, bc, x)));
    }
    EXPECT_LE(worst, 1e-3 * (bc.p_inlet() - bc.p_outlet()));
  }
}

TEST(MomentumResidual, IsothermalIsZero) {
  const MediumParams m(1e-3, 1.0);
  const auto f = reference_fluid();
  const auto bc = reference_bc();
  const double scale = 2.0 * bc.flux() * f.inlet_viscosity();
  for (double z : {0.25, 0.5, 0.75}) {
    const auto r = momentum_residual(m, f, bc, 5e-4, z, 1e12, 1e-3);
    EXPECT_LE(std::abs(r.value), 1e-6 * scale);
    EXPECT_FALSE(r.cancellation_warning);
  }
}

TEST(MomentumResidual, SmoothNonIsothermalContract) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = hot_bc();
  const double scale = 2.0 * bc.flux() * f.inlet_viscosity();
  const auto r = momentum_residual(m, f, bc, 5e-4, 0.5, 1.0, 1e-3);
  EXPECT_LE(std::abs(r.value), 1e-6 * scale);
}

TEST(MomentumResidual, SecondOrderInStep) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = hot_bc();
  const double x = 5e-4, t = 0.05;
  const double r1 = std::abs(momentum_residual(m, f, bc, x, 0.5, t, 0.02).value);
  const double r2 = std::abs(momentum_residual(m, f, bc, x, 0.5, t, 0.01).value);
  EXPECT_NEAR(r1 / r2, 4.0, 0.2);
  // Same magnitude at the symmetry point and at the quarter point.
  const double r_quarter =
      std::abs(momentum_residual(m, f, bc, x, 0.25, t, 0.01).value);
  EXPECT_NEAR(r_quarter / r2, 1.0, 1e-3);
}

TEST(MomentumResidual, StencilChecksAndWarning) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = reference_bc();
  EXPECT_THROW(momentum_residual(m, f, bc, 5e-4, 0.0, 1.0, 1e-3), DomainError);
  EXPECT_THROW(momentum_residual(m, f, bc, 0.0, 0.5, 1.0, 1e-3), DomainError);
  EXPECT_THROW(momentum_residual(m, f, bc, 5e-4, 0.5, 1.0, 0.0), DomainError);
  EXPECT_THROW(momentum_residual(m, f, steep_bc(), 8e-4, 0.5, 1e10, 1e-3),
               DomainError);
  EXPECT_TRUE(momentum_residual(m, f, bc, 5e-4, 0.5, 1.0, 1e-5)
                  .cancellation_warning);
}

}  // namespace
