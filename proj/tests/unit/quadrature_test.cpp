#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "common/reference.hpp"
#include "oracles/erfc_oracle.hpp"
#include "slitflow/numerics/quadrature.hpp"

namespace {

using slitflow::numerics::integrate;
using slitflow::numerics::QuadratureError;

TEST(Integrate, Constant) {
  const auto r = integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_EQ(r.err_estimate, 0.0);
}

TEST(Integrate, CubicIsExact) {
  const auto r = integrate([](double x) { return x * x * x; }, 0.0, 1.0, 1e-3);
  EXPECT_EQ(r.value, 0.25);
  // One refinement is enough: the panel difference vanishes for cubics.
  EXPECT_EQ(r.evaluations, 5u);
}

TEST(Integrate, GaussianMatchesErfRelation) {
  const double tol = 1e-12;
  const auto r = integrate([](double x) { return std::exp(-x * x); }, 0.0, 1.0,
                           tol);
  const double via_erf =
      0.5 * std::sqrt(std::numbers::pi) *
      (1.0 - static_cast<double>(slitflow::oracle::erfc_reference(1.0L)));
  EXPECT_NEAR(via_erf, slitflow::testing::kGaussianIntegral01, 1e-15);
  EXPECT_NEAR(r.value, slitflow::testing::kGaussianIntegral01, tol);
  EXPECT_LE(r.err_estimate, tol);
}

TEST(Integrate, EmptyInterval) {
  const auto r = integrate([](double) { return 3.0; }, 2.0, 2.0, 1e-9);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.evaluations, 0u);
}

TEST(Integrate, InvalidArguments) {
  auto f = [](double x) { return x; };
  EXPECT_THROW(integrate(f, 1.0, 0.0, 1e-9), slitflow::DomainError);
  EXPECT_THROW(integrate(f, 0.0, 1.0, 0.0), slitflow::DomainError);
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-9),
               slitflow::DomainError);
}

TEST(Integrate, CapReportsBestEstimate) {
  // sqrt has an unbounded derivative at 0; a tiny cap cannot reach 1e-14.
  auto f = [](double x) { return std::sqrt(x); };
  try {
    integrate(f, 0.0, 1.0, 1e-14, 8);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_NEAR(e.best().value, 2.0 / 3.0, 1e-2);
    EXPECT_GT(e.best().err_estimate, 0.0);
    EXPECT_GT(e.best().evaluations, 0u);
  }
}

TEST(Integrate, SharpFrontWithinTolerance) {
  const double tol = 1e-10;
  auto f = [](double x) { return std::tanh(200.0 * (x - 0.3)); };
  const auto r = integrate(f, 0.0, 1.0, tol);
  const double exact =
      (std::log(std::cosh(200.0 * 0.7)) - std::log(std::cosh(200.0 * 0.3))) /
      200.0;
  EXPECT_NEAR(r.value, exact, tol);
  EXPECT_LE(r.err_estimate, tol);
}

TEST(Integrate, LinearInIntegrand) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const double tol = 1e-10;
  for (int trial = 0; trial < 50; ++trial) {
    const double alpha = coef(rng), beta = coef(rng);
    const double w1 = 1.0 + std::abs(coef(rng)), w2 = 1.0 + std::abs(coef(rng));
    auto f = [&](double x) { return std::sin(w1 * x); };
    auto g = [&](double x) { return std::exp(-w2 * x * x); };
    auto h = [&](double x) { return alpha * f(x) + beta * g(x); };
    const double lhs = integrate(h, 0.0, 2.0, tol).value;
    const double rhs = alpha * integrate(f, 0.0, 2.0, tol).value +
                       beta * integrate(g, 0.0, 2.0, tol).value;
    EXPECT_NEAR(lhs, rhs, 2.0 * tol * (1.0 + std::abs(alpha) + std::abs(beta)));
  }
}

}  // namespace
