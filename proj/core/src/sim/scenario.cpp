#include "slitflow/sim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "slitflow/errors.hpp"
#include "slitflow/sim/csv.hpp"

namespace slitflow::sim {
namespace {

enum class ValueType { number, count, list, boolean, word };

struct KeySpec {
  std::string_view key;
  ValueType type;
  bool required;
};

constexpr KeySpec kKeys[] = {
    {"medium.L", ValueType::number, true},
    {"medium.K", ValueType::number, true},
    {"fluid.lambda_i", ValueType::number, true},
    {"fluid.pi_S", ValueType::number, true},
    {"fluid.eta_E", ValueType::number, true},
    {"fluid.psi", ValueType::number, true},
    {"bc.theta_E", ValueType::number, true},
    {"bc.theta_S", ValueType::number, true},
    {"bc.p_E", ValueType::number, true},
    {"bc.p_S", ValueType::number, true},
    {"bc.q", ValueType::number, true},
    {"sim.z_levels", ValueType::list, false},
    {"sim.x2_points", ValueType::count, false},
    {"sim.output_times", ValueType::list, false},
    {"sim.t_end", ValueType::number, false},
    {"sim.dt", ValueType::number, false},
    {"sim.ode_rel_tol", ValueType::number, false},
    {"sim.max_steps", ValueType::count, false},
    {"sim.max_halvings", ValueType::count, false},
    {"sim.pressure_rel_tol", ValueType::number, false},
    {"sim.recession_tol", ValueType::number, false},
    {"sim.burn_in_factor", ValueType::number, false},
    {"sim.bound_tol", ValueType::number, false},
    {"sim.asymptotic_time", ValueType::number, false},
    {"sim.recession_model", ValueType::word, false},
    {"sim.recession_constant", ValueType::number, false},
    {"outputs.fields", ValueType::boolean, false},
    {"outputs.trajectory", ValueType::boolean, false},
    {"outputs.report", ValueType::boolean, false},
};

const KeySpec* find_key(std::string_view key) {
  for (const auto& spec : kKeys) {
    if (spec.key == key) return &spec;
  }
  return nullptr;
}

struct RawValue {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.';
}

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& message, std::size_t line,
                         std::size_t column, std::string field = {}) const {
    std::ostringstream os;
    os << source_ << ":" << line << ":" << column << ": " << message;
    throw ScenarioError(ScenarioError::Kind::parse, os.str(), line, column,
                        std::move(field));
  }

  std::map<std::string, RawValue> read(std::string_view text) {
    std::map<std::string, RawValue> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
      ++line_no;
      const auto nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{}
                                          : text.substr(nl + 1);
      read_line(line, line_no, entries);
    }
    return entries;
  }

 private:
  void read_line(std::string_view line, std::size_t line_no,
                 std::map<std::string, RawValue>& entries) {
    const auto hash = line.find('#');
    const std::string_view body = line.substr(0, hash);
    std::size_t pos = 0;
    while (pos < body.size() && is_space(body[pos])) ++pos;
    if (pos == body.size()) return;

    const std::size_t key_start = pos;
    while (pos < body.size() && is_key_char(body[pos])) ++pos;
    const std::string key(body.substr(key_start, pos - key_start));
    if (key.empty()) {
      fail("expected a key", line_no, key_start + 1);
    }
    while (pos < body.size() && is_space(body[pos])) ++pos;
    if (pos == body.size() || body[pos] != '=') {
      fail("expected '=' after key '" + key + "'", line_no, pos + 1, key);
    }
    ++pos;
    while (pos < body.size() && is_space(body[pos])) ++pos;
    const std::string_view value = trim(body.substr(pos));
    if (value.empty()) {
      fail("missing value for key '" + key + "'", line_no, pos + 1, key);
    }
    if (find_key(key) == nullptr) {
      fail("unknown key '" + key + "'", line_no, key_start + 1, key);
    }
    if (entries.count(key) != 0) {
      fail("duplicate key '" + key + "'", line_no, key_start + 1, key);
    }
    entries.emplace(key, RawValue{std::string(value), line_no, pos + 1});
  }

  std::string source_;
};

class Converter {
 public:
  Converter(const Reader& reader, const std::map<std::string, RawValue>& raw)
      : reader_(reader), raw_(raw) {}

  double number(std::string_view key) const {
    const auto& v = at(key);
    return parse_number(v.text, v, key, 0);
  }

  std::optional<double> optional_number(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  std::optional<std::size_t> optional_count(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = at(key);
    std::size_t out = 0;
    const char* end = v.text.data() + v.text.size();
    const auto [ptr, ec] = std::from_chars(v.text.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
      reader_.fail("expected a non-negative integer for '" + std::string(key) +
                       "'",
                   v.line, v.column, std::string(key));
    }
    return out;
  }

  std::optional<std::vector<double>> optional_list(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = at(key);
    std::vector<double> out;
    std::string_view rest = v.text;
    std::size_t offset = 0;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item_raw = rest.substr(0, comma);
      std::size_t lead = 0;
      while (lead < item_raw.size() && is_space(item_raw[lead])) ++lead;
      out.push_back(parse_number(trim(item_raw), v, key, offset + lead));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      offset += comma + 1;
    }
    return out;
  }

  std::optional<bool> optional_bool(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    const auto& v = at(key);
    if (v.text == "true") return true;
    if (v.text == "false") return false;
    reader_.fail("expected true or false for '" + std::string(key) + "'",
                 v.line, v.column, std::string(key));
  }

  std::optional<std::string> optional_word(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return at(key).text;
  }

  const RawValue* position(std::string_view key) const {
    const auto it = raw_.find(std::string(key));
    return it == raw_.end() ? nullptr : &it->second;
  }

 private:
  bool has(std::string_view key) const {
    return raw_.count(std::string(key)) != 0;
  }

  const RawValue& at(std::string_view key) const {
    const auto it = raw_.find(std::string(key));
    if (it == raw_.end()) {
      throw ScenarioError(ScenarioError::Kind::validation,
                          "missing required key '" + std::string(key) + "'", 0,
                          0, std::string(key));
    }
    return it->second;
  }

  double parse_number(std::string_view text, const RawValue& v,
                      std::string_view key, std::size_t offset) const {
    double out = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(out)) {
      reader_.fail("invalid number '" + std::string(text) + "' for '" +
                       std::string(key) + "'",
                   v.line, v.column + offset, std::string(key));
    }
    return out;
  }

  const Reader& reader_;
  const std::map<std::string, RawValue>& raw_;
};

std::string invariant_of(const InvariantError& e) {
  constexpr std::string_view prefix = "invariant violated: ";
  std::string_view msg = e.what();
  if (msg.substr(0, prefix.size()) == prefix) msg.remove_prefix(prefix.size());
  return std::string(msg);
}

void append(std::string& out, std::string_view key, std::string_view value) {
  out.append(key).append(" = ").append(value).push_back('\n');
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text, std::string_view source) {
  Reader reader(source);
  const auto raw = reader.read(text);
  const Converter in(reader, raw);

  // Report every missing required key at once, in file order.
  std::string missing;
  for (const auto& spec : kKeys) {
    if (spec.required && raw.count(std::string(spec.key)) == 0) {
      if (!missing.empty()) missing += ", ";
      missing += spec.key;
    }
  }
  if (!missing.empty()) {
    throw ScenarioError(ScenarioError::Kind::validation,
                        std::string(source) + ": missing required key(s): " +
                            missing,
                        0, 0, missing);
  }

  try {
    MediumParams medium(in.number("medium.L"), in.number("medium.K"));
    FluidParams fluid(in.number("fluid.lambda_i"), in.number("fluid.pi_S"),
                      in.number("fluid.eta_E"), in.number("fluid.psi"));
    BoundaryConditions bc(in.number("bc.theta_E"), in.number("bc.theta_S"),
                          in.number("bc.p_E"), in.number("bc.p_S"),
                          in.number("bc.q"));

    SimConfig sim;
    if (auto v = in.optional_list("sim.z_levels")) sim.z_levels = *v;
    if (auto v = in.optional_count("sim.x2_points")) sim.x2_points = *v;
    if (auto v = in.optional_list("sim.output_times")) sim.output_times = *v;
    if (auto v = in.optional_number("sim.t_end")) sim.t_end = *v;
    if (auto v = in.optional_number("sim.dt")) sim.dt = *v;
    if (auto v = in.optional_number("sim.ode_rel_tol")) sim.ode_rel_tol = *v;
    if (auto v = in.optional_count("sim.max_steps")) sim.max_steps = *v;
    if (auto v = in.optional_count("sim.max_halvings")) sim.max_halvings = *v;
    if (auto v = in.optional_number("sim.pressure_rel_tol")) {
      sim.pressure_rel_tol = *v;
    }
    if (auto v = in.optional_number("sim.recession_tol")) {
      sim.recession_tol = *v;
    }
    if (auto v = in.optional_number("sim.burn_in_factor")) {
      sim.burn_in_factor = *v;
    }
    if (auto v = in.optional_number("sim.bound_tol")) sim.bound_tol = *v;
    if (auto v = in.optional_number("sim.asymptotic_time")) {
      sim.asymptotic_time = *v;
    }
    if (auto v = in.optional_word("sim.recession_model")) {
      sim.recession_model = parse_recession_model(*v);
    }
    if (auto v = in.optional_number("sim.recession_constant")) {
      sim.recession_constant = *v;
    }
    sim.validate();

    OutputSelection outputs;
    if (auto v = in.optional_bool("outputs.fields")) outputs.fields = *v;
    if (auto v = in.optional_bool("outputs.trajectory")) outputs.trajectory = *v;
    if (auto v = in.optional_bool("outputs.report")) outputs.report = *v;

    return Scenario{medium, fluid, bc, std::move(sim), outputs};
  } catch (const InvariantError& e) {
    const std::string invariant = invariant_of(e);
    throw ScenarioError(ScenarioError::Kind::validation,
                        std::string(source) + ": " + e.what(), 0, 0,
                        invariant);
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw ScenarioError(ScenarioError::Kind::io,
                        "cannot open scenario file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) {
    throw ScenarioError(ScenarioError::Kind::io,
                        "error reading scenario file '" + path.string() + "'");
  }
  return parse_scenario(buffer.str(), path.string());
}

std::string write_scenario(const Scenario& s) {
  std::string out;
  append(out, "medium.L", format_double(s.medium.length()));
  append(out, "medium.K", format_double(s.medium.diffusivity()));
  append(out, "fluid.lambda_i", format_double(s.fluid.clapeyron_constant()));
  append(out, "fluid.pi_S", format_double(s.fluid.boiling_pressure()));
  append(out, "fluid.eta_E", format_double(s.fluid.inlet_viscosity()));
  append(out, "fluid.psi", format_double(s.fluid.sutherland_constant()));
  append(out, "bc.theta_E", format_double(s.bc.theta_inlet()));
  append(out, "bc.theta_S", format_double(s.bc.theta_outlet()));
  append(out, "bc.p_E", format_double(s.bc.p_inlet()));
  append(out, "bc.p_S", format_double(s.bc.p_outlet()));
  append(out, "bc.q", format_double(s.bc.flux()));
  append(out, "sim.z_levels", join(s.sim.z_levels));
  append(out, "sim.x2_points", std::to_string(s.sim.x2_points));
  if (!s.sim.output_times.empty()) {
    append(out, "sim.output_times", join(s.sim.output_times));
  }
  append(out, "sim.t_end", format_double(s.sim.t_end));
  append(out, "sim.dt", format_double(s.sim.dt));
  append(out, "sim.ode_rel_tol", format_double(s.sim.ode_rel_tol));
  append(out, "sim.max_steps", std::to_string(s.sim.max_steps));
  append(out, "sim.max_halvings", std::to_string(s.sim.max_halvings));
  append(out, "sim.pressure_rel_tol", format_double(s.sim.pressure_rel_tol));
  append(out, "sim.recession_tol", format_double(s.sim.recession_tol));
  append(out, "sim.burn_in_factor", format_double(s.sim.burn_in_factor));
  append(out, "sim.bound_tol", format_double(s.sim.bound_tol));
  append(out, "sim.asymptotic_time", format_double(s.sim.asymptotic_time));
  append(out, "sim.recession_model", to_string(s.sim.recession_model));
  append(out, "sim.recession_constant",
         format_double(s.sim.recession_constant));
  append(out, "outputs.fields", s.outputs.fields ? "true" : "false");
  append(out, "outputs.trajectory", s.outputs.trajectory ? "true" : "false");
  append(out, "outputs.report", s.outputs.report ? "true" : "false");
  return out;
}

Scenario with_parameter(const Scenario& s, std::string_view name,
                        double value) {
  Scenario out = s;
  const auto& bc = s.bc;
  const auto& fluid = s.fluid;
  if (name == "theta_E") {
    out.bc = BoundaryConditions(value, bc.theta_outlet(), bc.p_inlet(),
                                bc.p_outlet(), bc.flux());
  } else if (name == "p_E") {
    out.bc = BoundaryConditions(bc.theta_inlet(), bc.theta_outlet(), value,
                                bc.p_outlet(), bc.flux());
  } else if (name == "q") {
    out.bc = BoundaryConditions(bc.theta_inlet(), bc.theta_outlet(),
                                bc.p_inlet(), bc.p_outlet(), value);
  } else if (name == "lambda_i") {
    out.fluid = FluidParams(value, fluid.boiling_pressure(),
                            fluid.inlet_viscosity(),
                            fluid.sutherland_constant());
  } else if (name == "K") {
    out.medium = MediumParams(s.medium.length(), value);
  } else {
    throw DomainError("unknown sweep parameter '" + std::string(name) +
                      "' (expected theta_E, p_E, q, lambda_i or K)");
  }
  return out;
}

}  // namespace slitflow::sim
