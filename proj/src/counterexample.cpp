#include "fraclayer/counterexample.hpp"

#include "fraclayer/numerics.hpp"

#include <cmath>
#include <numbers>

namespace fraclayer {

namespace {
constexpr double pi = std::numbers::pi;
}

double OscParams::gamma() const { return 2.0 * std::abs(beta - alpha) / beta; }

void OscParams::validate() const {
  if (!(alpha > 0.0)) throw DomainError("counterexample: alpha must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("counterexample: beta must lie in (0,1)");
  if (!(gamma() > 0.0)) throw DomainError("counterexample: alpha must differ from beta");
}

double osc_f(const OscParams& params, double x) {
  params.validate();
  if (!(x > 0.0 && x < 1.0)) throw DomainError("osc_f: x must lie in (0,1)");
  const double phase = std::pow(x, -params.gamma());
  if (phase > 1e12 * (1.0 + 1e-12))
    throw DomainError("osc_f: x^{-gamma} exceeds 1e12; the phase is not resolved in double");
  return std::pow(x, params.alpha) * (std::sin(phase) / std::log(x) + 1.0);
}

double sin_pi(double r) {
  double m = std::fmod(r, 2.0);
  if (m < 0.0) m += 2.0;
  if (m == 0.0 || m == 1.0) return 0.0;
  if (m == 0.5) return 1.0;
  if (m == 1.5) return -1.0;
  return std::sin(pi * m);
}

OscPoints osc_points(const OscParams& params, long long n) {
  params.validate();
  if (n < 1) throw DomainError("osc_points: n must be positive");
  const double g = params.gamma();
  const double nd = static_cast<double>(n);
  OscPoints pts;
  pts.p = std::pow(2.0 / (pi * (2.0 + 2.0 * nd)), 1.0 / g);
  pts.q = std::pow(2.0 / (pi * (1.0 + 2.0 * nd)), 1.0 / g);
  pts.phase_p_over_pi = nd + 1.0;
  pts.phase_q_over_pi = nd + 0.5;
  pts.phase_p = pi * pts.phase_p_over_pi;
  pts.phase_q = pi * pts.phase_q_over_pi;
  return pts;
}

double osc_f_at_phase(const OscParams& params, double x, double phase_over_pi) {
  return std::pow(x, params.alpha) * (sin_pi(phase_over_pi) / std::log(x) + 1.0);
}

HolderTerms holder_terms(const OscParams& params, long long n) {
  const OscPoints pts = osc_points(params, n);
  const double g = params.gamma();
  // p / q = ((1+2n)/(2+2n))^{1/gamma}.
  const double log_ratio = std::log1p(-1.0 / (2.0 + 2.0 * static_cast<double>(n)));
  HolderTerms h;
  h.f_p = osc_f_at_phase(params, pts.p, pts.phase_p_over_pi);
  h.f_q = osc_f_at_phase(params, pts.q, pts.phase_q_over_pi);
  h.dx = -pts.q * std::expm1(log_ratio / g);
  const double qa = std::pow(pts.q, params.alpha);
  const double power_gap = -qa * std::expm1(params.alpha * log_ratio / g);
  h.df = power_gap + qa * sin_pi(pts.phase_q_over_pi) / std::log(pts.q);
  h.quotient = std::abs(h.df) / std::pow(h.dx, params.beta);
  return h;
}

double holder_quotient(const OscParams& params, long long n) {
  return holder_terms(params, n).quotient;
}

double holder_slope(const OscParams& params, const std::vector<long long>& ns) {
  if (ns.size() < 2) throw DomainError("holder_slope: needs at least two n");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (long long n : ns) {
    const double lx = std::log(static_cast<double>(n));
    const double ly = std::log(holder_quotient(params, n));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(ns.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace fraclayer
