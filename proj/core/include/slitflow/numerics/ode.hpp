#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "slitflow/errors.hpp"

namespace slitflow::numerics {

struct OdeStepperConfig {
  double dt = 1e-2;
  /// Relative tolerance used by callers that check step-halving convergence.
  double rel_tol = 1e-6;
  std::size_t max_steps = 10'000'000;

  /// Throws InvariantError unless dt > 0 and rel_tol > 0.
  void validate() const;
};

struct OdeSample {
  double t = 0.0;
  double x = 0.0;
};

/// Right-hand side dx/dt = rhs(t, x).
using OdeRhs = std::function<double(double, double)>;
/// Optional map applied to the state after every accepted step (e.g. a clamp).
using StateProjection = std::function<double(double)>;

class OdeError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// One classical fourth-order Runge-Kutta step.
double rk4_step(const OdeRhs& rhs, double t, double x, double dt);

/// Fixed-step RK4 from t0 to t_end.
///
/// Samples are returned at t0 + k*dt (time computed by multiplication, not
/// accumulation) plus a final, possibly shorter, step landing exactly on
/// t_end. The first sample is (t0, x0). Throws OdeError when more than
/// cfg.max_steps steps would be needed.
std::vector<OdeSample> ode_solve(const OdeRhs& rhs, double x0, double t0,
                                 double t_end, const OdeStepperConfig& cfg,
                                 const StateProjection& project = {});

}  // namespace slitflow::numerics
