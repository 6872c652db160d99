#include "config.hpp"

#include <cmath>
#include <set>

#include "json.hpp"

namespace fdo::cli {

const char* command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::bounds: return "bounds";
    case Command::phasespace: return "phasespace";
    case Command::verify: return "verify";
    case Command::asymptotics: return "asymptotics";
  }
  return "?";
}

std::optional<Command> command_from_name(const std::string& name) {
  for (Command c : {Command::spectrum, Command::bounds, Command::phasespace,
                    Command::verify, Command::asymptotics}) {
    if (name == command_name(c)) return c;
  }
  return std::nullopt;
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw config_error(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path,
                    const std::set<std::string>& known) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
  }
}

double take_number(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) fail(path + key, "missing");
  if (!obj[key].is_number()) fail(path + key, "must be a number");
  return obj[key].get<double>();
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw config_error("top level: must be a JSON object");
  reject_unknown(root, "",
                 {"potential", "grid", "lambdas", "a_override", "epsilon_override",
                  "command", "output_dir", "emit_svg"});

  RunConfig cfg;

  if (!root.contains("potential") || !root["potential"].is_object()) {
    fail("potential", "missing object");
  }
  const json& pot = root["potential"];
  reject_unknown(pot, "potential", {"p", "beta"});
  cfg.p = take_number(pot, "potential.", "p");
  cfg.beta = take_number(pot, "potential.", "beta");
  if (!(cfg.p >= 0.0)) fail("potential.p", "must be >= 0");
  if (!(cfg.beta >= 0.0 && cfg.beta <= 2.0)) fail("potential.beta", "must lie in [0, 2]");
  if (cfg.p == 0.0 && cfg.beta == 0.0) {
    fail("potential.p", "p and beta cannot both be zero (degenerate potential)");
  }

  if (!root.contains("grid") || !root["grid"].is_object()) fail("grid", "missing object");
  const json& grid = root["grid"];
  reject_unknown(grid, "grid", {"L", "N"});
  cfg.grid_half_extent = take_number(grid, "grid.", "L");
  if (!(cfg.grid_half_extent > 0.0)) fail("grid.L", "must be > 0");
  const double n_raw = take_number(grid, "grid.", "N");
  if (n_raw != std::floor(n_raw)) fail("grid.N", "must be an integer");
  cfg.grid_points = static_cast<int>(n_raw);
  if (cfg.grid_points < 8 || cfg.grid_points % 2 != 0) {
    fail("grid.N", "must be even and >= 8");
  }

  if (!root.contains("lambdas") || !root["lambdas"].is_array()) {
    fail("lambdas", "missing array");
  }
  for (std::size_t i = 0; i < root["lambdas"].size(); ++i) {
    const json& v = root["lambdas"][i];
    const std::string path = "lambdas[" + std::to_string(i) + "]";
    if (!v.is_number()) fail(path, "must be a number");
    const double lambda = v.get<double>();
    if (!(lambda > 0.0)) fail(path, "must be > 0");
    if (!cfg.lambdas.empty() && lambda <= cfg.lambdas.back()) {
      fail(path, "lambdas must be strictly increasing");
    }
    cfg.lambdas.push_back(lambda);
  }

  if (root.contains("a_override")) {
    if (!root["a_override"].is_number()) fail("a_override", "must be a number");
    cfg.a_override = root["a_override"].get<double>();
    if (!(*cfg.a_override > 0.0)) fail("a_override", "must be > 0");
  }
  if (root.contains("epsilon_override")) {
    if (!root["epsilon_override"].is_number()) fail("epsilon_override", "must be a number");
    cfg.epsilon_override = root["epsilon_override"].get<double>();
    if (!(*cfg.epsilon_override > 0.0 && *cfg.epsilon_override <= 1.0)) {
      fail("epsilon_override", "must lie in (0, 1]");
    }
  }

  if (!root.contains("command") || !root["command"].is_string()) {
    fail("command", "missing string");
  }
  const auto cmd = command_from_name(root["command"].get<std::string>());
  if (!cmd) {
    fail("command", "must be one of spectrum, bounds, phasespace, verify, asymptotics");
  }
  cfg.command = *cmd;

  if (!root.contains("output_dir") || !root["output_dir"].is_string()) {
    fail("output_dir", "missing string");
  }
  cfg.output_dir = root["output_dir"].get<std::string>();
  if (cfg.output_dir.empty()) fail("output_dir", "must be non-empty");

  if (root.contains("emit_svg")) {
    if (!root["emit_svg"].is_boolean()) fail("emit_svg", "must be a boolean");
    cfg.emit_svg = root["emit_svg"].get<bool>();
  }
  return cfg;
}

}  // namespace fdo::cli
