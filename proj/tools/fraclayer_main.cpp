#include "fraclayer/run.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Power-tail transition layers, their fractional Laplacian and double-well potential"};
  app.set_version_flag("--version", fraclayer::tool_version);
  app.require_subcommand(1);

  fraclayer::RunOptions opts;
  std::string config, out_dir;
  app.add_option("-c,--config", config, "JSON run configuration");
  app.add_option("-o,--output-dir", out_dir, "Output directory (overrides config and environment)");

  const char* names[][2] = {
      {"layer", "Tabulate phi, phi' and phi'' on the layer grid"},
      {"fraclap", "Evaluate L_s phi on the fraclap grid"},
      {"potential", "Build V and V' on [-1, 1]"},
      {"verify", "Run the limit checks and write the verification report"},
      {"extension", "Poisson extension, w by two methods, Hamiltonian inequality"},
      {"counterexample", "Hoelder quotient of the oscillatory function"},
      {"all", "Every subcommand in turn"}};
  for (const auto& n : names) {
    auto* sub = app.add_subcommand(n[0], n[1])->fallthrough();
    if (std::string(n[0]) == "fraclap")
      sub->add_flag("--arctan", opts.arctan, "Use u = (2/pi) arctan with s = 1/2");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : fraclayer::exit_config_error;
  }
  if (!config.empty()) opts.config_path = config;
  if (!out_dir.empty()) opts.output_dir = out_dir;
  const std::string sub = app.get_subcommands().front()->get_name();
  return fraclayer::run_command(sub, opts, std::cerr);
}
