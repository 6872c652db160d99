#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fdo::cli::config_error("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral laboratory for functional difference operators"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  bool emit_svg = false;

  for (fdo::cli::Command c :
       {fdo::cli::Command::spectrum, fdo::cli::Command::bounds,
        fdo::cli::Command::phasespace, fdo::cli::Command::verify,
        fdo::cli::Command::asymptotics}) {
    auto* sub = app.add_subcommand(fdo::cli::command_name(c));
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--output-dir", output_dir, "overrides config output_dir");
    sub->add_flag("--emit-svg", emit_svg, "also write SVG plots");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    fdo::cli::RunConfig cfg = fdo::cli::parse_config(read_file(config_path));
    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub != fdo::cli::command_name(cfg.command)) {
      throw fdo::cli::config_error("command: config says '" +
                                   std::string(fdo::cli::command_name(cfg.command)) +
                                   "' but the subcommand is '" + sub + "'");
    }
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (emit_svg) cfg.emit_svg = true;
    return fdo::cli::run_guarded(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return fdo::cli::kExitConfig;
  }
}
