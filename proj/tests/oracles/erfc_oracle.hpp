#pragma once

// Slow extended-precision erfc used only as a test oracle. It uses
// different formulas from the library: the alternating Maclaurin series
// of erf for x <= 3 and a continued fraction evaluated bottom-up (fixed
// depth) beyond.

#include <cmath>

namespace slitflow::oracle {

inline long double erf_maclaurin(long double x) {
  // erf(x) = 2/sqrt(pi) * sum (-1)^n x^(2n+1) / (n! (2n+1))
  const long double x2 = x * x;
  long double power = x;  // (-1)^n x^(2n+1) / n!
  long double sum = 0.0L;
  for (int n = 0; n < 400; ++n) {
    const long double term = power / (2 * n + 1);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && n > 4) break;
    power *= -x2 / (n + 1);
  }
  const long double two_over_sqrt_pi = 1.1283791670955125738961589031215452L;
  return two_over_sqrt_pi * sum;
}

inline long double erfc_fraction(long double x) {
  long double tail = x;
  for (int n = 4000; n >= 1; --n) {
    tail = x + (0.5L * n) / tail;
  }
  const long double inv_sqrt_pi = 0.5641895835477562869480794515607726L;
  return std::exp(-x * x) * inv_sqrt_pi / tail;
}

inline long double erfc_reference(long double x) {
  if (x < 0.0L) return 2.0L - erfc_reference(-x);
  if (x <= 3.0L) return 1.0L - erf_maclaurin(x);
  return erfc_fraction(x);
}

}  // namespace slitflow::oracle
