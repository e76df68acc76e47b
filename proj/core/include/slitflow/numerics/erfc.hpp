#pragma once

namespace slitflow::numerics {

/// Complementary error function.
///
/// Absolute error is below 1e-12 on [0, 6]; the result underflows to zero
/// for x beyond ~27. Negative arguments use erfc(-x) = 2 - erfc(x).
/// Throws DomainError for non-finite input.
double erfc(double x);

/// erf(x) = 1 - erfc(x), evaluated without cancellation for small |x|.
double erf(double x);

}  // namespace slitflow::numerics
