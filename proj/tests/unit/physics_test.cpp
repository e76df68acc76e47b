#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "common/reference.hpp"
#include "oracles/erfc_oracle.hpp"
#include "slitflow/physics.hpp"

namespace {

using namespace slitflow;
using namespace slitflow::testing;

TEST(Params, RejectInvalidMedium) {
  EXPECT_THROW(MediumParams(0.0, 1e-6), InvariantError);
  EXPECT_THROW(MediumParams(1e-3, -1.0), InvariantError);
}

TEST(Params, RejectInvalidFluid) {
  EXPECT_THROW(FluidParams(0.0, 2339, 1e-5, 120), InvariantError);
  EXPECT_THROW(FluidParams(5304, 0.0, 1e-5, 120), InvariantError);
  EXPECT_THROW(FluidParams(5304, 2339, 0.0, 120), InvariantError);
  EXPECT_THROW(FluidParams(5304, 2339, 1e-5, -1.0), InvariantError);
  EXPECT_NO_THROW(FluidParams(5304, 2339, 1e-5, 0.0));
}

TEST(Params, BoundaryOrderingMessagesNameTheInvariant) {
  try {
    BoundaryConditions(293.15, 293.15, 5e5, 1e5, 1e-3);
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("theta_E > theta_S"),
              std::string::npos);
  }
  EXPECT_THROW(BoundaryConditions(313.15, 293.15, 1e5, 1e5, 1e-3),
               InvariantError);
  EXPECT_THROW(BoundaryConditions(313.15, 293.15, 5e5, 1e5, 0.0),
               InvariantError);
}

TEST(Temperature, InitialAndBoundaryValues) {
  const auto m = reference_medium();
  const auto bc = reference_bc();
  EXPECT_EQ(temperature(m, bc, 0.05, 0.0), bc.theta_outlet());
  EXPECT_EQ(temperature(m, bc, 0.0, 100.0), bc.theta_inlet());
  // Corner: the inlet condition wins.
  EXPECT_EQ(temperature(m, bc, 0.0, 0.0), bc.theta_inlet());
}

TEST(Temperature, WorkedExample) {
  const MediumParams m(0.1, 1e-6);
  const auto bc = hot_bc();
  const double theta = temperature(m, bc, 0.05, 1000.0);
  EXPECT_NEAR(theta, 330.0, 0.5);
  EXPECT_NEAR(theta, kTemperatureExample, 1e-9);
}

TEST(Temperature, LimitIsInletTemperature) {
  const auto m = reference_medium();
  const auto bc = reference_bc();
  EXPECT_EQ(temperature_limit(bc), bc.theta_inlet());
  const double span = bc.theta_inlet() - bc.theta_outlet();
  EXPECT_LE(std::abs(temperature(m, bc, m.length(), 1e12) - bc.theta_inlet()),
            1e-6 * span);
}

TEST(Temperature, NegativeArgumentsRejected) {
  const auto m = reference_medium();
  const auto bc = reference_bc();
  EXPECT_THROW(temperature(m, bc, -1e-6, 1.0), DomainError);
  EXPECT_THROW(temperature(m, bc, 1e-6, -1.0), DomainError);
}

TEST(Temperature, BoundedAndMonotoneProperties) {
  const auto m = reference_medium();
  const auto bc = hot_bc();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ux(1e-5, 0.999e-3);
  std::uniform_real_distribution<double> ut(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double x = ux(rng);
    const double t = std::pow(10.0, ut(rng));
    const double th = temperature(m, bc, x, t);
    EXPECT_GE(th, bc.theta_outlet());
    EXPECT_LE(th, bc.theta_inlet());
    const double dx = 1e-3 * x, dt = 1e-3 * t;
    EXPECT_LE(temperature(m, bc, x + dx, t), th);
    EXPECT_GE(temperature(m, bc, x, t + dt), th);
  }
}

TEST(Temperature, MatchesOracleClosedForm) {
  const auto m = reference_medium();
  const auto bc = reference_bc();
  const double span = bc.theta_inlet() - bc.theta_outlet();
  for (double x : {1e-5, 1e-4, 5e-4, 1e-3}) {
    for (double t : {1e-3, 0.1, 10.0, 1e4}) {
      const long double arg = x / (2.0L * std::sqrt(1e-6L * t));
      const double ref = bc.theta_outlet() +
                         span * static_cast<double>(
                                    slitflow::oracle::erfc_reference(arg));
      EXPECT_NEAR(temperature(m, bc, x, t), ref, 1e-10 * span);
    }
  }
}

TEST(SaturationPressure, ReferenceValues) {
  const auto f = reference_fluid();
  const auto bc = reference_bc();
  EXPECT_EQ(saturation_pressure(f, bc, bc.theta_outlet()), 2339.0);
  const double p = saturation_pressure(f, bc, 313.15);
  EXPECT_NEAR(p, 7429.0, 1.0);
  EXPECT_NEAR(p, kSaturation31315, 1e-8);
  EXPECT_EQ(saturation_pressure_limit(f, bc),
            saturation_pressure(f, bc, bc.theta_inlet()));
}

TEST(SaturationPressure, BoundedCeilingAndMonotone) {
  const auto f = reference_fluid();
  const auto bc = reference_bc();
  const double ceiling = 2339.0 * std::exp(5304.0 / 293.15);
  EXPECT_LT(saturation_pressure(f, bc, 1e9), ceiling);
  EXPECT_NEAR(saturation_pressure(f, bc, 1e12) / ceiling, 1.0, 1e-8);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ut(50.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    double a = ut(rng), b = ut(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    EXPECT_LT(saturation_pressure(f, bc, a), saturation_pressure(f, bc, b));
  }
  EXPECT_THROW(saturation_pressure(f, bc, 0.0), DomainError);
}

TEST(Viscosity, SutherlandValues) {
  const auto f = reference_fluid();
  const auto bc = hot_bc();
  EXPECT_EQ(viscosity(f, bc, bc.theta_inlet()), f.inlet_viscosity());
  const double eta = viscosity(f, bc, 293.15);
  EXPECT_NEAR(eta, 1.044e-5, 1e-8);
  EXPECT_NEAR(eta, kViscosity29315Hot, 1e-18);
  EXPECT_THROW(viscosity(f, bc, -1.0), DomainError);
}

TEST(Viscosity, TendsToInletValueAlongHeatSolution) {
  const auto m = reference_medium();
  const auto f = reference_fluid();
  const auto bc = hot_bc();
  const double eta = viscosity(f, bc, temperature(m, bc, m.length(), 1e12));
  EXPECT_NEAR(eta / f.inlet_viscosity(), 1.0, 1e-6);
  for (double th = 1.0; th < 3000.0; th *= 1.7) {
    EXPECT_GT(viscosity(f, bc, th), 0.0);
  }
}

}  // namespace
