#pragma once

// Subcommand driver behind the command-line tool.

#include "fraclayer/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace fraclayer {

inline constexpr const char* tool_name = "fraclayer";
inline constexpr const char* tool_version = "0.1.0";

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_config_error = 2, exit_io_error = 3 };

struct RunOptions {
  std::optional<std::string> config_path;
  /// fraclap: evaluate the arctan profile instead of the configured layer.
  bool arctan = false;
  /// Takes precedence over the environment and the config file.
  std::optional<std::string> output_dir;
};

/// Environment variable that overrides output_dir from the config file.
inline constexpr const char* output_dir_env = "FRACLAYER_OUTPUT_DIR";

/// Runs one of layer, fraclap, potential, verify, extension, counterexample, all.
/// Messages go to log. Returns an ExitCode.
int run_command(const std::string& subcommand, const RunOptions& options, std::ostream& log);

}  // namespace fraclayer
