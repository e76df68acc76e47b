#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slitflow/condensation_front.hpp"
#include "slitflow/sim/csv.hpp"
#include "slitflow/sim/scenario.hpp"

namespace slitflow::sim {

/// Process exit codes of the driver.
enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInputError = 2,
  kExitNumericFailure = 3,
};

struct LevelReport {
  double z = 0.0;
  double bound = 0.0;
  bool bound_applicable = false;
  double plateau = 0.0;
  double initial_velocity = 0.0;
  double final_x2 = 0.0;
  double final_velocity = 0.0;
  double dt_used = 0.0;
  double halving_delta = 0.0;
  double max_quad_err = 0.0;
  double quad_tol = 0.0;
  BoundCheck domination;
  /// "ok" or "numeric_failure".
  std::string status = "ok";
  std::string failure;
};

struct RunReport {
  std::vector<LevelReport> levels;
  double ode_rel_tol = 0.0;
  double max_pressure_err = 0.0;
  double pressure_tol = 0.0;
  double max_asymptotic_pressure_diff = 0.0;
  double max_asymptotic_delta_diff = 0.0;
  bool finite_rows = true;
  int exit_code = kExitPass;
  std::string failure_cause;

  /// Flat `key = value` text, one entry per line.
  std::string render() const;
};

struct RunResult {
  RunReport report;
  CsvTable fields;
  CsvTable trajectory;
  CsvTable asymptotic;
  std::vector<FrontTrajectory> trajectories;
};

/// Evaluates the fields, integrates every z-level and runs the
/// verifications, without touching the filesystem. Numeric failures are
/// recorded in the report rather than thrown.
RunResult execute(const Scenario& scenario);

/// Writes fields.csv, trajectory.csv, asymptotic.csv and report.txt into
/// out_dir (created if needed), honouring scenario.outputs.
void write_outputs(const Scenario& scenario, const RunResult& result,
                   const std::filesystem::path& out_dir);

/// execute() followed by write_outputs().
RunReport run(const Scenario& scenario, const std::filesystem::path& out_dir);

struct SweepRow {
  double value = 0.0;
  double z = 0.0;
  double final_x2 = 0.0;
  double bound = 0.0;
  bool bound_applicable = false;
  double plateau = 0.0;
  std::string status;
  std::string message;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepRow> rows;
  int exit_code = kExitPass;
  CsvTable table;
};

/// One independent run per value, executed on up to `threads` workers
/// (0 = hardware concurrency). A failing value only affects its own rows.
SweepResult sweep(const Scenario& scenario, std::string_view parameter,
                  std::span<const double> values, unsigned threads = 0);

/// Writes sweep.csv into out_dir.
void write_sweep(const Scenario& scenario, const SweepResult& result,
                 const std::filesystem::path& out_dir);

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Field invariants evaluated on the scenario grid at its output times.
std::vector<CheckItem> check_invariants(const Scenario& scenario);

}  // namespace slitflow::sim
