// slitflow: batch driver for the condensable-vapour injection model.
//
//   slitflow run   --scenario <file> --out-dir <dir> [--quiet]
//   slitflow sweep --scenario <file> --out-dir <dir> --param <name>
//                  --values <v1,v2,...> [--threads N] [--quiet]
//   slitflow check --scenario <file> [--quiet]
//
// Exit codes: 0 pass, 1 verification failure, 2 input error,
// 3 numeric failure.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slitflow/errors.hpp"
#include "slitflow/sim/run.hpp"
#include "slitflow/sim/scenario.hpp"
#include "slitflow/version.hpp"

namespace {

using namespace slitflow::sim;

int do_run(const std::string& scenario_path, const std::string& out_dir,
           bool quiet) {
  const Scenario scenario = load_scenario(scenario_path);
  const RunReport report = run(scenario, out_dir);
  if (!quiet) {
    std::cout << report.render();
  }
  return report.exit_code;
}

int do_sweep(const std::string& scenario_path, const std::string& out_dir,
             const std::string& param, const std::vector<double>& values,
             unsigned threads, bool quiet) {
  const Scenario scenario = load_scenario(scenario_path);
  const SweepResult result = sweep(scenario, param, values, threads);
  write_sweep(scenario, result, out_dir);
  if (!quiet) {
    std::cout << result.table.render();
  }
  return result.exit_code;
}

int do_check(const std::string& scenario_path, bool quiet) {
  const Scenario scenario = load_scenario(scenario_path);
  int code = kExitPass;
  for (const auto& item : check_invariants(scenario)) {
    if (!item.pass) code = kExitVerificationFailure;
    if (!quiet || !item.pass) {
      std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
      if (!item.detail.empty()) std::cout << ": " << item.detail;
      std::cout << '\n';
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Condensable vapour injection in slit pores"};
  app.set_version_flag("--version", std::string(slitflow::kVersion));
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = "out";
  std::string param;
  std::vector<double> values;
  unsigned threads = 0;
  bool quiet = false;

  auto* run_cmd = app.add_subcommand("run", "Evaluate fields and integrate the front");
  run_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
  run_cmd->add_option("--out-dir", out_dir, "Output directory");
  run_cmd->add_flag("--quiet", quiet, "Do not print the report");

  auto* sweep_cmd = app.add_subcommand("sweep", "Repeat a run over parameter values");
  sweep_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
  sweep_cmd->add_option("--out-dir", out_dir, "Output directory");
  sweep_cmd->add_option("--param", param, "theta_E, p_E, q, lambda_i or K")
      ->required()
      ->check(CLI::IsMember({"theta_E", "p_E", "q", "lambda_i", "K"}));
  sweep_cmd->add_option("--values", values, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_flag("--quiet", quiet, "Do not print the table");

  auto* check_cmd = app.add_subcommand("check", "Run the field invariant suite");
  check_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
  check_cmd->add_flag("--quiet", quiet, "Only print failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*run_cmd) return do_run(scenario_path, out_dir, quiet);
    if (*sweep_cmd) {
      return do_sweep(scenario_path, out_dir, param, values, threads, quiet);
    }
    if (*check_cmd) return do_check(scenario_path, quiet);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const slitflow::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
