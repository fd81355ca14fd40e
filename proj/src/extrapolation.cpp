#include "fraclayer/extrapolation.hpp"

#include "fraclayer/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace fraclayer {

namespace {

std::vector<double> aitken_pass(const std::vector<double>& v) {
  std::vector<double> out;
  out.reserve(v.size() - 2);
  for (std::size_t k = 0; k + 2 < v.size(); ++k) {
    const double d1 = v[k + 1] - v[k];
    const double d2 = v[k + 2] - v[k + 1];
    const double dd = d2 - d1;
    const double scale = std::max({std::abs(v[k]), std::abs(v[k + 1]), std::abs(v[k + 2])});
    if (std::abs(dd) <= 1e-14 * scale || !std::isfinite(dd)) {
      // Differences already at rounding level: the sequence has settled.
      out.push_back(v[k + 2]);
    } else {
      out.push_back(v[k + 2] - d2 * d2 / dd);
    }
  }
  return out;
}

bool erratic(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return true;
  const double scale = std::max(1.0, std::abs(v.back()));
  // Growing differences over the second half of the sequence.
  const std::size_t start = v.size() / 2;
  for (std::size_t k = std::max<std::size_t>(start, 1); k + 1 < v.size(); ++k) {
    const double d0 = std::abs(v[k] - v[k - 1]);
    const double d1 = std::abs(v[k + 1] - v[k]);
    if (d0 <= 1e-14 * scale) continue;
    if (d1 > 1.05 * d0) return true;
  }
  return false;
}

}  // namespace

LimitEstimate extrapolate_limit(const std::vector<Sample>& samples, double tol) {
  if (samples.size() < 4) throw DomainError("extrapolate_limit: needs at least 4 samples");
  for (std::size_t k = 1; k < samples.size(); ++k) {
    if (!(std::abs(samples[k].abscissa) > std::abs(samples[k - 1].abscissa)))
      throw DomainError("extrapolate_limit: |abscissae| must increase strictly");
  }

  LimitEstimate est;
  est.samples = samples;
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(s.value);

  if (erratic(v)) {
    est.extrapolated = v.back();
    est.error_estimate = std::abs(v.back() - v[v.size() - 2]);
    est.converged = false;
    return est;
  }

  std::vector<double> level = v;
  while (level.size() >= 4) level = aitken_pass(level);
  est.extrapolated = level.back();
  est.error_estimate = std::abs(level.back() - level[level.size() - 2]);
  est.converged = std::isfinite(est.extrapolated) &&
                  est.error_estimate < tol * std::max(1.0, std::abs(est.extrapolated));
  return est;
}

}  // namespace fraclayer
