#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdo::cli {

enum class Command { spectrum, bounds, phasespace, verify, asymptotics };

const char* command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

/// A configuration problem; the message starts with the offending field path.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double p = 0.0;
  double beta = 0.0;
  double grid_half_extent = 0.0;
  int grid_points = 0;
  std::vector<double> lambdas;
  std::optional<double> a_override;
  std::optional<double> epsilon_override;
  Command command = Command::verify;
  std::string output_dir;
  bool emit_svg = false;
};

/// Strict JSON parse: unknown keys are rejected, every violation reports its
/// field path.  All invariants of the potential, grid and sweep are checked.
RunConfig parse_config(const std::string& text);

}  // namespace fdo::cli
