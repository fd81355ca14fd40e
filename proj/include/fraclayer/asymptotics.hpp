#pragma once

// Verification harness: every limit claim about the layer, its fractional
// Laplacian and its potential becomes a LimitReport (sampled sequence,
// extrapolated value, target, pass/fail). Reports and scalar checks aggregate
// into a VerificationReport serialized to JSON or CSV.

#include "fraclayer/extrapolation.hpp"
#include "fraclayer/layer.hpp"
#include "fraclayer/potential.hpp"
#include "fraclayer/quadrature.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fraclayer {

enum class LimitSide { minus_infinity, plus_infinity, left_well, right_well };

std::string to_string(LimitSide side);

struct LimitReport {
  std::string name;
  /// The claim being checked, in words.
  std::string paper_eq;
  LimitSide side = LimitSide::plus_infinity;
  LimitEstimate estimate;
  /// Empty when only finiteness of the limit is claimed.
  std::optional<double> target;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ScalarCheck {
  std::string name;
  std::string paper_eq;
  double value = 0.0;
  std::optional<double> target;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  LayerParams layer;
  QuadratureConfig quadrature;
  std::vector<LimitReport> limits;
  std::vector<ScalarCheck> scalars;

  bool all_pass() const;
  std::size_t check_count() const { return limits.size() + scalars.size(); }
};

/// Abscissae x_k = x0 2^k, k = 0..samples-1, on the side being sampled.
struct SamplingConfig {
  /// Starting abscissa; <= 0 selects 50 kappa.
  double x0 = 0.0;
  int samples = 7;
  double tolerance = 2e-2;

  double start(const Layer& layer) const;
  void validate() const;
};

/// |x|^{2s} L_s phi(x) -> 1/s as x -> -inf and -1/s as x -> +inf.
/// Returns {x -> -inf, x -> +inf}.
std::pair<LimitReport, LimitReport> verify_fraclap_decay(const Layer& layer,
                                                         const QuadratureConfig& cfg,
                                                         const SamplingConfig& sampling = {});

/// |x|^{i+2s} L_s phi^(i)(x) -> (-+1)^{i-1} 2 Gamma(i+2s)/Gamma(1+2s), i in [1, 3].
/// Returns {x -> -inf, x -> +inf}.
std::pair<LimitReport, LimitReport> verify_derivative_decay(const Layer& layer, int i,
                                                            const QuadratureConfig& cfg,
                                                            const SamplingConfig& sampling = {});

/// V and V' near the wells, scaled by the predicted powers of 1 -+ r.
/// Order: V' at -1+, V at -1+, V' at 1-, V at 1-.
std::vector<LimitReport> verify_potential_limits(const Layer& layer, const PotentialModel& model,
                                                 const QuadratureConfig& cfg,
                                                 const SamplingConfig& sampling = {});

/// V^(i+1) near the wells scaled by (1 -+ r)^{2s/e - i}, i in [1, 3]. Where the
/// regularity hypothesis fails and 2s/e is an integer, only finiteness is checked.
/// Returns {-1+, 1-}.
std::pair<LimitReport, LimitReport> verify_higher_limits(const Layer& layer, int i,
                                                         const QuadratureConfig& cfg,
                                                         const SamplingConfig& sampling = {});

/// V(-1) = 0 exactly, |V(1)| <= 1e-4 max V, V > 0 on the interior grid.
std::vector<ScalarCheck> verify_double_well(const PotentialModel& model);

/// (floor(2s/alpha), floor(2s/beta)).
std::pair<int, int> regularity_class(const LayerParams& params);

/// Target of the well limits: (1/s) C^{-a} prod_{j<i} (a - j), a = 2s/e, signed
/// (-1)^{i+1} on the right. i = 0 gives the V' limit.
double well_derivative_target(const LayerParams& params, int i, bool right);

/// Every report above for one layer. Reports run concurrently and are
/// collected in a fixed order.
VerificationReport verify_all(const Layer& layer, const QuadratureConfig& cfg,
                              const PotentialGridConfig& grid = {},
                              const SamplingConfig& sampling = {});

nlohmann::json to_json(const LayerParams& params);
nlohmann::json to_json(const QuadratureConfig& cfg);
nlohmann::json to_json(const LimitReport& report);
nlohmann::json to_json(const ScalarCheck& check);
nlohmann::json to_json(const VerificationReport& report);
/// One row per check: kind,name,paper_eq,side,target,estimate,rel_error,tolerance,pass.
std::string to_csv(const VerificationReport& report);

}  // namespace fraclayer
