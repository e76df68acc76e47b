#pragma once

#include <cstddef>
#include <functional>

#include "slitflow/errors.hpp"

namespace slitflow::numerics {

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Thrown when the subinterval cap is reached before the tolerance is met.
/// Carries the best estimate computed so far.
class QuadratureError : public NumericError {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : NumericError(what), best_(best) {}
  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

inline constexpr std::size_t kDefaultMaxIntervals = std::size_t{1} << 20;

using Integrand = std::function<double(double)>;

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
///
/// Each accepted panel contributes the Richardson-corrected value
/// S2 + (S2 - S1) / 15 and |S2 - S1| / 15 to the error estimate, so cubic
/// polynomials are integrated exactly. Requires a <= b and tol > 0.
QuadratureResult integrate(const Integrand& f, double a, double b, double tol,
                           std::size_t max_intervals = kDefaultMaxIntervals);

}  // namespace slitflow::numerics
