#include "slitflow/numerics/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace slitflow::numerics {
namespace {

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  double tol;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, double tol,
                           std::size_t max_intervals) {
  if (!(a <= b)) {
    throw DomainError("integrate: requires a <= b");
  }
  if (!(tol > 0.0)) {
    throw DomainError("integrate: tolerance must be positive");
  }
  QuadratureResult result;
  if (a == b) {
    return result;
  }

  auto eval = [&](double x) {
    ++result.evaluations;
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw DomainError("integrate: integrand is not finite at x = " +
                        std::to_string(x));
    }
    return y;
  };

  const double m = 0.5 * (a + b);
  const double fa = eval(a);
  const double fm = eval(m);
  const double fb = eval(b);

  std::vector<Panel> stack;
  stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol});
  std::size_t intervals = 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();

    const double mid = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + mid);
    const double rm = 0.5 * (mid + p.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(p.a, mid, p.fa, flm, p.fm);
    const double right = simpson(mid, p.b, p.fm, frm, p.fb);
    const double diff = left + right - p.whole;

    // The last clause accepts panels whose difference is pure rounding noise;
    // their contribution to err_estimate is then at the rounding level.
    const bool converged = std::abs(diff) <= 15.0 * p.tol;
    const bool unsplittable = !(p.a < lm && rm < p.b);
    const bool noise =
        std::abs(diff) <= 64.0 * eps * (std::abs(left) + std::abs(right));
    if (converged || unsplittable || noise) {
      result.value += left + right + diff / 15.0;
      result.err_estimate += std::abs(diff) / 15.0;
      continue;
    }

    if (++intervals > max_intervals) {
      QuadratureResult best = result;
      best.value += left + right;
      best.err_estimate += std::abs(diff) / 15.0;
      for (const Panel& rest : stack) {
        best.value += rest.whole;
        best.err_estimate += rest.tol;
      }
      throw QuadratureError("integrate: subinterval cap of " +
                                std::to_string(max_intervals) +
                                " reached; error estimate " +
                                std::to_string(best.err_estimate),
                            best);
    }
    stack.push_back({mid, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol});
    stack.push_back({p.a, mid, p.fa, flm, p.fm, left, 0.5 * p.tol});
  }

  if (result.err_estimate > tol) {
    throw QuadratureError("integrate: error estimate " +
                              std::to_string(result.err_estimate) +
                              " exceeds tolerance " + std::to_string(tol),
                          result);
  }
  return result;
}

}  // namespace slitflow::numerics
