#include "slitflow/sim/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "slitflow/field_solver.hpp"
#include "slitflow/version.hpp"

namespace slitflow::sim {
namespace {

std::vector<std::string> header_comments(const Scenario& scenario) {
  std::vector<std::string> lines;
  lines.push_back(std::string("slitflow ") + kVersion);
  std::istringstream in(write_scenario(scenario));
  for (std::string line; std::getline(in, line);) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<double> field_times(const SimConfig& cfg) {
  if (cfg.output_times.empty()) return {cfg.t_end};
  return cfg.output_times;
}

void fill_fields(const Scenario& s, const std::vector<double>& grid,
                 RunResult& result) {
  const double tol = s.sim.pressure_rel_tol * s.bc.p_inlet();
  result.fields.header = {"t", "x2", "theta", "eta", "p_i", "p_vs", "delta"};
  for (double t : field_times(s.sim)) {
    const auto profile = pressure_profile(s.medium, s.fluid, s.bc, grid, t, tol);
    result.report.max_pressure_err =
        std::max(result.report.max_pressure_err, profile.err_estimate);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double theta = temperature(s.medium, s.bc, grid[i], t);
      const double p = profile.p_values[i];
      const double p_vs = saturation_pressure(s.fluid, s.bc, theta);
      result.fields.rows.push_back({t, grid[i], theta,
                                    viscosity(s.fluid, s.bc, theta), p, p_vs,
                                    std::max(0.0, (p - p_vs) / p)});
    }
  }
}

void fill_asymptotic(const Scenario& s, const std::vector<double>& grid,
                     RunResult& result) {
  const double tol = s.sim.pressure_rel_tol * s.bc.p_inlet();
  const double t = s.sim.asymptotic_time;
  result.asymptotic.header = {"x2",    "p_i",       "p_inf",      "p_abs_diff",
                              "delta", "delta_inf", "delta_abs_diff"};
  const auto profile = pressure_profile(s.medium, s.fluid, s.bc, grid, t, tol);
  result.report.max_pressure_err =
      std::max(result.report.max_pressure_err, profile.err_estimate);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double p = profile.p_values[i];
    const double p_inf = asymptotic_pressure(s.medium, s.fluid, s.bc, x);
    const double theta = temperature(s.medium, s.bc, x, t);
    const double d =
        std::max(0.0, 1.0 - saturation_pressure(s.fluid, s.bc, theta) / p);
    const double d_inf = delta_infinity(s.medium, s.fluid, s.bc, x);
    result.report.max_asymptotic_pressure_diff =
        std::max(result.report.max_asymptotic_pressure_diff, std::abs(p - p_inf));
    result.report.max_asymptotic_delta_diff =
        std::max(result.report.max_asymptotic_delta_diff, std::abs(d - d_inf));
    result.asymptotic.rows.push_back(
        {x, p, p_inf, std::abs(p - p_inf), d, d_inf, std::abs(d - d_inf)});
  }
}

void fill_level(const Scenario& s, double z, RunResult& result) {
  LevelReport level;
  level.z = z;
  const auto bound = asymptotic_bound(s.fluid, s.bc, z);
  level.bound = bound.value;
  level.bound_applicable = bound.applicable;
  level.plateau = bound.plateau;
  level.initial_velocity = injection_speed(s.bc, z);
  level.quad_tol = s.sim.recession_tol;

  FrontTrajectory trajectory;
  try {
    trajectory = advance_front(s.medium, s.fluid, s.bc, s.sim, z, s.sim.t_end);
  } catch (const SimulationError& e) {
    trajectory = e.partial();
    level.status = "numeric_failure";
    level.failure = e.what();
  } catch (const NumericError& e) {
    trajectory.z = z;
    level.status = "numeric_failure";
    level.failure = e.what();
  }
  if (!trajectory.samples.empty()) {
    level.final_x2 = trajectory.samples.back().x2_front;
    level.final_velocity = trajectory.samples.back().velocity;
  }
  level.dt_used = trajectory.dt_used;
  level.halving_delta = trajectory.halving_delta;
  level.max_quad_err = trajectory.max_quad_err;
  if (level.status == "ok") {
    level.domination =
        check_bound_domination(trajectory, s.fluid, s.bc, s.sim.bound_tol);
  }

  const double w0 = level.initial_velocity;
  for (const auto& st : trajectory.samples) {
    CsvCell majorant = std::string();
    if (bound.applicable) majorant = majorant_solution(w0, bound.plateau, st.t);
    result.trajectory.rows.push_back(
        {z, st.t, st.x2_front, st.k0, st.velocity, majorant});
  }
  result.report.levels.push_back(std::move(level));
  result.trajectories.push_back(std::move(trajectory));
}

void decide_exit(RunResult& result) {
  auto& rep = result.report;
  rep.finite_rows = result.fields.all_finite() &&
                    result.trajectory.all_finite() &&
                    result.asymptotic.all_finite();
  std::vector<std::string> failures;
  bool numeric = false;
  for (const auto& level : rep.levels) {
    const std::string tag = "z = " + format_double(level.z) + ": ";
    if (level.status != "ok") {
      numeric = true;
      failures.push_back(tag + level.failure);
      continue;
    }
    if (level.domination.status == BoundCheck::Status::fail) {
      failures.push_back(tag + "bound domination failed: " +
                         level.domination.detail);
    }
    if (!(level.halving_delta < rep.ode_rel_tol)) {
      failures.push_back(tag + "step-halving delta above sim.ode_rel_tol");
    }
    if (level.max_quad_err > level.quad_tol) {
      failures.push_back(tag + "k0 quadrature error above sim.recession_tol");
    }
  }
  if (rep.max_pressure_err > rep.pressure_tol) {
    failures.push_back("pressure quadrature error above tolerance");
  }
  if (!rep.finite_rows) {
    failures.push_back("non-finite value in an output table");
  }
  if (!rep.failure_cause.empty()) {
    numeric = true;
    failures.insert(failures.begin(), rep.failure_cause);
  }
  std::string cause;
  for (const auto& f : failures) {
    if (!cause.empty()) cause += "; ";
    cause += f;
  }
  rep.failure_cause = cause;
  if (numeric) {
    rep.exit_code = kExitNumericFailure;
  } else if (!failures.empty()) {
    rep.exit_code = kExitVerificationFailure;
  } else {
    rep.exit_code = kExitPass;
  }
}

std::string status_name(int exit_code) {
  switch (exit_code) {
    case kExitPass:
      return "pass";
    case kExitVerificationFailure:
      return "verification_failure";
    case kExitInputError:
      return "input_error";
    default:
      return "numeric_failure";
  }
}

}  // namespace

std::string RunReport::render() const {
  std::string out;
  auto put = [&out](const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
  };
  auto num = [](double v) { return format_double(v); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };

  put("version", kVersion);
  put("status", status_name(exit_code));
  put("exit_code", std::to_string(exit_code));
  put("failure_cause", failure_cause.empty() ? "none" : failure_cause);
  put("finite_rows", flag(finite_rows));
  put("profile_flux_fraction", num(kProfileFluxFraction));
  put("convergence.ode_rel_tol", num(ode_rel_tol));
  put("convergence.pressure_max_err_estimate", num(max_pressure_err));
  put("convergence.pressure_tol", num(pressure_tol));
  put("asymptotic.max_pressure_abs_diff", num(max_asymptotic_pressure_diff));
  put("asymptotic.max_delta_abs_diff", num(max_asymptotic_delta_diff));
  put("levels", std::to_string(levels.size()));
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& l = levels[i];
    const std::string p = "level." + std::to_string(i) + ".";
    put(p + "z", num(l.z));
    put(p + "status", l.status);
    if (!l.failure.empty()) put(p + "failure", l.failure);
    put(p + "bound_applicable", flag(l.bound_applicable));
    put(p + "bound", l.bound_applicable ? num(l.bound) : "not applicable");
    put(p + "plateau", num(l.plateau));
    put(p + "initial_velocity", num(l.initial_velocity));
    put(p + "final_x2", num(l.final_x2));
    put(p + "final_velocity", num(l.final_velocity));
    put(p + "convergence.dt_used", num(l.dt_used));
    put(p + "convergence.halving_delta", num(l.halving_delta));
    put(p + "convergence.quad_max_err_estimate", num(l.max_quad_err));
    put(p + "convergence.quad_tol", num(l.quad_tol));
    put(p + "domination", std::string(to_string(l.domination.status)));
    put(p + "domination.checked_samples",
        std::to_string(l.domination.checked_samples));
    put(p + "domination.max_majorant_ratio",
        num(l.domination.max_majorant_ratio));
    if (!l.domination.detail.empty()) {
      put(p + "domination.detail", l.domination.detail);
    }
  }
  return out;
}

RunResult execute(const Scenario& s) {
  RunResult result;
  result.report.ode_rel_tol = s.sim.ode_rel_tol;
  result.report.pressure_tol = s.sim.pressure_rel_tol * s.bc.p_inlet();
  result.trajectory.header = {"z", "t", "x2_front", "k0", "velocity",
                              "majorant"};
  const auto grid = uniform_grid(s.medium.length(), s.sim.x2_points);
  try {
    if (s.outputs.fields) fill_fields(s, grid, result);
    fill_asymptotic(s, grid, result);
  } catch (const NumericError& e) {
    result.report.failure_cause = std::string("field evaluation: ") + e.what();
  }
  for (double z : s.sim.z_levels) {
    fill_level(s, z, result);
  }
  decide_exit(result);
  return result;
}

void write_outputs(const Scenario& scenario, const RunResult& result,
                   const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto comments = header_comments(scenario);
  if (scenario.outputs.fields) {
    write_text_file(out_dir / "fields.csv", result.fields.render(comments));
    write_text_file(out_dir / "asymptotic.csv",
                    result.asymptotic.render(comments));
  }
  if (scenario.outputs.trajectory) {
    write_text_file(out_dir / "trajectory.csv",
                    result.trajectory.render(comments));
  }
  if (scenario.outputs.report) {
    write_text_file(out_dir / "report.txt", result.report.render());
  }
}

RunReport run(const Scenario& scenario, const std::filesystem::path& out_dir) {
  auto result = execute(scenario);
  write_outputs(scenario, result, out_dir);
  return std::move(result.report);
}

SweepResult sweep(const Scenario& scenario, std::string_view parameter,
                  std::span<const double> values, unsigned threads) {
  if (std::find(std::begin(kSweepParameters), std::end(kSweepParameters),
                parameter) == std::end(kSweepParameters)) {
    throw DomainError("unknown sweep parameter '" + std::string(parameter) +
                      "' (expected theta_E, p_E, q, lambda_i or K)");
  }
  SweepResult out;
  out.parameter = std::string(parameter);

  std::vector<std::vector<SweepRow>> per_value(values.size());
  std::vector<int> codes(values.size(), kExitPass);
  auto work = [&](std::size_t i) {
    const double value = values[i];
    try {
      Scenario s = with_parameter(scenario, parameter, value);
      s.outputs.fields = false;
      const auto result = execute(s);
      codes[i] = result.report.exit_code;
      for (const auto& level : result.report.levels) {
        SweepRow row;
        row.value = value;
        row.z = level.z;
        row.final_x2 = level.final_x2;
        row.bound = level.bound;
        row.bound_applicable = level.bound_applicable;
        row.plateau = level.plateau;
        row.status = status_name(result.report.exit_code);
        row.message = result.report.failure_cause;
        per_value[i].push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      codes[i] = kExitInputError;
      SweepRow row;
      row.value = value;
      row.status = status_name(kExitInputError);
      row.message = e.what();
      per_value[i].push_back(std::move(row));
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(values.size())));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) work(i);
      });
    }
  }

  auto rank = [](int code) {
    switch (code) {
      case kExitNumericFailure:
        return 3;
      case kExitInputError:
        return 2;
      case kExitVerificationFailure:
        return 1;
      default:
        return 0;
    }
  };
  for (int code : codes) {
    if (rank(code) > rank(out.exit_code)) out.exit_code = code;
  }

  out.table.header = {out.parameter, "z",       "final_x2", "bound",
                      "bound_applicable", "plateau", "status", "message"};
  for (auto& rows : per_value) {
    for (auto& row : rows) {
      CsvCell bound = std::string("inf");
      if (row.bound_applicable) bound = row.bound;
      out.table.rows.push_back(
          {row.value, row.z, row.final_x2, bound,
           std::string(row.bound_applicable ? "true" : "false"), row.plateau,
           row.status, row.message});
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

void write_sweep(const Scenario& scenario, const SweepResult& result,
                 const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto comments = header_comments(scenario);
  comments.push_back("sweep parameter: " + result.parameter);
  write_text_file(out_dir / "sweep.csv", result.table.render(comments));
}

std::vector<CheckItem> check_invariants(const Scenario& s) {
  std::vector<CheckItem> items;
  const auto& m = s.medium;
  const auto& f = s.fluid;
  const auto& bc = s.bc;
  const auto grid = uniform_grid(m.length(), s.sim.x2_points);
  const auto times = field_times(s.sim);
  const double tol = s.sim.pressure_rel_tol * bc.p_inlet();

  auto add = [&items](std::string name, bool pass, std::string detail) {
    items.push_back({std::move(name), pass, std::move(detail)});
  };

  bool bounded = true, decreasing_x = true, increasing_t = true;
  std::vector<double> previous;
  for (double t : times) {
    std::vector<double> now;
    for (double x : grid) {
      const double th = temperature(m, bc, x, t);
      bounded &= th >= bc.theta_outlet() && th <= bc.theta_inlet();
      if (!now.empty()) decreasing_x &= th <= now.back();
      now.push_back(th);
    }
    if (!previous.empty()) {
      for (std::size_t i = 0; i < now.size(); ++i) {
        increasing_t &= now[i] >= previous[i];
      }
    }
    previous = std::move(now);
  }
  add("temperature within [theta_S, theta_E]", bounded, "");
  add("temperature non-increasing in x2", decreasing_x, "");
  add("temperature non-decreasing in t", increasing_t, "");

  bool inlet = true, monotone_p = true, range_p = true, delta_ok = true;
  bool delta_zero = true;
  try {
    for (double t : times) {
      const auto profile = pressure_profile(m, f, bc, grid, t, tol);
      inlet &= profile.p_values.front() == bc.p_inlet();
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double p = profile.p_values[i];
        range_p &= p >= bc.p_outlet() && p <= bc.p_inlet();
        if (i > 0) monotone_p &= p <= profile.p_values[i - 1];
        const double p_vs =
            saturation_pressure(f, bc, temperature(m, bc, grid[i], t));
        const double d = delta(m, f, bc, grid[i], t, tol);
        delta_ok &= d >= 0.0 && d < 1.0;
        delta_zero &= (p <= p_vs) == (d == 0.0);
      }
    }
    add("pressure equals p_E at the inlet", inlet, "");
    add("pressure non-increasing in x2", monotone_p, "");
    add("pressure within [p_S, p_E]", range_p, "");
    add("delta within [0, 1)", delta_ok, "");
    add("delta vanishes exactly where p_i <= p_vs", delta_zero, "");
  } catch (const NumericError& e) {
    add("pressure quadrature", false, e.what());
  }

  bool eta_positive = true, pvs_increasing = true;
  double last_pvs = 0.0;
  const double span = bc.theta_inlet() - bc.theta_outlet();
  for (int i = 0; i <= 100; ++i) {
    const double th = bc.theta_outlet() + span * i / 100.0;
    eta_positive &= viscosity(f, bc, th) > 0.0;
    const double pvs = saturation_pressure(f, bc, th);
    if (i > 0) pvs_increasing &= pvs > last_pvs;
    last_pvs = pvs;
  }
  add("viscosity positive", eta_positive, "");
  add("viscosity equals eta_E at theta_E",
      viscosity(f, bc, bc.theta_inlet()) == f.inlet_viscosity(), "");
  add("saturation pressure increasing in theta", pvs_increasing, "");

  bool asym_ok = true;
  double last = bc.p_inlet();
  for (double x : grid) {
    const double p = asymptotic_pressure(m, f, bc, x);
    asym_ok &= p <= last && p >= bc.p_outlet() && p <= bc.p_inlet();
    last = p;
  }
  add("asymptotic pressure non-increasing within [p_S, p_E]", asym_ok, "");

  const auto bound = asymptotic_bound(f, bc, 0.5);
  add("arrest bound applicability", true,
      bound.applicable ? "applicable, plateau " + format_double(bound.plateau)
                       : "not applicable (p_vs,inf >= p_S)");
  return items;
}

}  // namespace slitflow::sim
