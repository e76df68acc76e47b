#pragma once

// Brute-force composite Simpson rule with a fixed number of panels.

#include <cstddef>

namespace slitflow::oracle {

template <class F>
double simpson_fixed(F&& f, double a, double b, std::size_t panels) {
  if (a == b) return 0.0;
  const double h = (b - a) / static_cast<double>(panels);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < panels; ++i) {
    const double x0 = a + h * static_cast<double>(i);
    const double x1 = (i + 1 == panels) ? b : a + h * static_cast<double>(i + 1);
    const double xm = 0.5 * (x0 + x1);
    sum += (x1 - x0) / 6.0L * (f(x0) + 4.0L * f(xm) + f(x1));
  }
  return static_cast<double>(sum);
}

}  // namespace slitflow::oracle
