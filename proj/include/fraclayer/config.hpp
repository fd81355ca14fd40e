#pragma once

// Run configuration for the batch tool: a JSON document whose every key is
// optional and whose unknown keys are rejected.

#include "fraclayer/asymptotics.hpp"
#include "fraclayer/counterexample.hpp"
#include "fraclayer/layer.hpp"
#include "fraclayer/potential.hpp"
#include "fraclayer/quadrature.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclayer {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UniformGrid {
  double min = -10.0;
  double max = 10.0;
  int count = 41;

  std::vector<double> points() const;
};

struct ExtensionGrid {
  /// "arctan" or "layer".
  std::string profile = "arctan";
  UniformGrid x{-3.0, 3.0, 13};
  std::vector<double> y{0.1, 0.25, 0.5, 1.0};
  /// Random (x, y) samples for the Hamiltonian inequality.
  int hamiltonian_samples = 20;
  double trace_y = 1e-3;
};

struct CounterexampleGrid {
  OscParams params;
  int n_min_exp = 3;
  int n_max_exp = 9;
};

struct RunConfig {
  LayerParams layer;
  QuadratureConfig quadrature;
  UniformGrid layer_grid{-20.0, 20.0, 81};
  UniformGrid fraclap_grid{-10.0, 10.0, 41};
  PotentialGridConfig potential;
  SamplingConfig sampling;
  ExtensionGrid extension;
  CounterexampleGrid counterexample;
  std::map<std::string, double> tolerances{{"limits", 2e-2},
                                           {"extension_trace", 1e-3},
                                           {"extension_cross", 1e-6},
                                           {"holder_slope", 0.1}};
  std::string output_dir = "fraclayer_out";
  std::uint64_t seed = 20240601;

  void validate() const;
};

/// Parses and validates; throws ConfigError on unknown keys, wrong types or invalid values.
RunConfig parse_config(const nlohmann::json& j);
/// Reads a file; throws ConfigError when it is missing or not valid JSON.
RunConfig load_config(const std::string& path);
/// The effective configuration, every field present.
nlohmann::json to_json(const RunConfig& cfg);
/// FNV-1a 64 of the compact dump of to_json(cfg), as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace fraclayer
