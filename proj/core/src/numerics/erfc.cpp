#include "slitflow/numerics/erfc.hpp"

#include <cmath>
#include <numbers>

#include "slitflow/errors.hpp"

namespace slitflow::numerics {
namespace {

// Below this point the positive-term series is used; above it, the
// continued fraction converges in well under kMaxFractionTerms terms.
constexpr double kSeriesCutoff = 2.0;
constexpr int kMaxSeriesTerms = 200;
constexpr int kMaxFractionTerms = 500;

// erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_n 2^n x^(2n+1) / (1*3*...*(2n+1)).
// Every term is positive, so there is no cancellation for 0 <= x <= 2.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 3.0);
    sum += term;
    if (term < sum * 1e-17) {
      break;
    }
  }
  return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < kMaxFractionTerms; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      break;
    }
  }
  return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(name) + ": non-finite argument");
  }
}

}  // namespace

double erfc(double x) {
  require_finite(x, "erfc");
  if (x < 0.0) {
    return 2.0 - erfc(-x);
  }
  if (x <= kSeriesCutoff) {
    return 1.0 - erf_series(x);
  }
  return erfc_continued_fraction(x);
}

double erf(double x) {
  require_finite(x, "erf");
  if (x < 0.0) {
    return -erf(-x);
  }
  if (x <= kSeriesCutoff) {
    return erf_series(x);
  }
  return 1.0 - erfc_continued_fraction(x);
}

}  // namespace slitflow::numerics
