#pragma once

#include <vector>

namespace fraclayer {

struct Sample {
  double abscissa = 0.0;
  double value = 0.0;
};

/// Limit of a sampled sequence v_k taken along geometric abscissae.
struct LimitEstimate {
  std::vector<Sample> samples;
  double extrapolated = 0.0;
  /// |last extrapolant - previous extrapolant|.
  double error_estimate = 0.0;
  bool converged = false;
};

/// Iterated Aitken delta-squared on the sample values. Each pass removes the
/// leading geometric correction c r^k (a power law c x_k^{-e} along x_k = x0 2^k);
/// passes repeat while at least two extrapolants would remain.
///
/// converged is true when the last two extrapolants differ by less than
/// tol * max(1, |extrapolated|). Samples whose differences grow are treated as
/// erratic: converged = false and the last raw value is returned.
///
/// Requires at least 4 samples with strictly increasing |abscissa| forming a
/// geometric progression (abscissae may all be negative).
LimitEstimate extrapolate_limit(const std::vector<Sample>& samples, double tol = 1e-6);

}  // namespace fraclayer
