#pragma once

// Scenario files: UTF-8 text, one `section.key = value` entry per line.
//
//   # comment (also allowed after a value)
//   medium.L = 1e-3
//   sim.z_levels = 0.25, 0.5
//   sim.recession_model = full
//   outputs.fields = true
//
// Sections are medium, fluid, bc, sim and outputs. Numbers use the C locale,
// lists are comma separated, booleans are true/false. The medium, fluid and
// bc keys are required; sim and outputs keys fall back to defaults. Unknown
// and duplicated keys are parse errors.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slitflow/physics.hpp"
#include "slitflow/sim_config.hpp"

namespace slitflow::sim {

struct OutputSelection {
  bool fields = true;
  bool trajectory = true;
  bool report = true;
};

struct Scenario {
  MediumParams medium;
  FluidParams fluid;
  BoundaryConditions bc;
  SimConfig sim;
  OutputSelection outputs;
};

class ScenarioError : public std::runtime_error {
 public:
  enum class Kind { io, parse, validation };

  ScenarioError(Kind kind, const std::string& what, std::size_t line = 0,
                std::size_t column = 0, std::string field = {})
      : std::runtime_error(what),
        kind_(kind),
        line_(line),
        column_(column),
        field_(std::move(field)) {}

  Kind kind() const noexcept { return kind_; }
  /// 1-based position of a parse error; 0 when not applicable.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// Offending key, or the invariant text for validation errors.
  const std::string& field() const noexcept { return field_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string field_;
};

/// Parses and validates scenario text. source names the input in messages.
Scenario parse_scenario(std::string_view text,
                        std::string_view source = "<scenario>");

/// Reads and parses a scenario file; missing or unreadable files raise an
/// io ScenarioError.
Scenario load_scenario(const std::filesystem::path& path);

/// Serialises every key in a fixed order with shortest round-trip numbers,
/// so parse_scenario(write_scenario(s)) reproduces s exactly.
std::string write_scenario(const Scenario& scenario);

/// Names accepted by with_parameter().
inline constexpr std::string_view kSweepParameters[] = {
    "theta_E", "p_E", "q", "lambda_i", "K"};

/// Copy of scenario with one driving parameter replaced. Throws
/// InvariantError if the result is invalid, DomainError for unknown names.
Scenario with_parameter(const Scenario& scenario, std::string_view name,
                        double value);

}  // namespace slitflow::sim
