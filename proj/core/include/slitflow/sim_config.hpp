#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace slitflow {

/// How the interface recession speed k0 is obtained during front integration.
enum class RecessionModel {
  full,        ///< quadrature of delta(x2, t) over the wetted region
  asymptotic,  ///< delta frozen to its long-time profile (closed form)
  constant,    ///< delta frozen to SimConfig::recession_constant
  none,        ///< no condensation, k0 = 0
};

std::string_view to_string(RecessionModel model);
/// Throws InvariantError for unknown names.
RecessionModel parse_recession_model(std::string_view name);

/// Grids, steps, tolerances and diagnostics settings of a simulation.
struct SimConfig {
  std::vector<double> z_levels{0.5};
  std::size_t x2_points = 101;
  /// Times at which fields and front states are recorded. Empty means the
  /// front is recorded at every integration step and fields only at t_end.
  std::vector<double> output_times;
  double t_end = 50.0;
  double dt = 0.05;
  double ode_rel_tol = 1e-6;
  std::size_t max_steps = 10'000'000;
  std::size_t max_halvings = 8;
  /// Pressure quadrature tolerance relative to p_E.
  double pressure_rel_tol = 1e-9;
  /// Absolute tolerance (m) on the k0 quadrature.
  double recession_tol = 1e-12;
  /// Large-time regime starts at burn_in_factor * L^2 / K.
  double burn_in_factor = 5.0;
  double bound_tol = 1e-6;
  /// Time used for the comparison against long-time profiles.
  double asymptotic_time = 1e10;
  RecessionModel recession_model = RecessionModel::full;
  double recession_constant = 0.0;

  /// Throws InvariantError naming the violated condition.
  void validate() const;
};

}  // namespace slitflow
