#pragma once

// One-dimensional fractional Laplacian without normalizing constant,
//
//   L_s f(x) = PV int (f(y) - f(x)) |x - y|^{-1-2s} dy
//            = int_0^inf (f(x+t) + f(x-t) - 2 f(x)) t^{-1-2s} dt,
//
// evaluated on a profile (Layer or ArctanLayer) or one of its derivatives.
//
// The t-axis is cut into three parts:
//   (0, delta]   even Taylor terms of the second difference, integrated exactly;
//   [delta, T]   adaptive Gauss panels, split where x +- t crosses a bridge knot;
//   [T, inf)     both x +- t lie in exact power tails: the anchors give a
//                closed-form constant part and each tail term c |y|^{-e} a
//                convergent series in x/T.

#include "fraclayer/layer.hpp"
#include "fraclayer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fraclayer {

struct FracBreakdown {
  double inner = 0.0;
  double mid = 0.0;
  double outer_constant = 0.0;
  double outer_power = 0.0;
};

struct FracEval {
  double value = 0.0;
  double error_estimate = 0.0;
  FracBreakdown breakdown;
  double inner_cutoff = 0.0;
  double outer_cutoff = 0.0;
  int panels = 0;
};

namespace detail {

/// int_T^inf (t - z T)^{-e} t^{-1-2s} dt * T^{e+2s} for |z| < 1, i.e.
/// sum_k (e)_k / k! z^k / (e + k + 2s).
inline double tail_power_series(double e, double z, double two_s) {
  double term = 1.0, sum = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const double add = term / (e + k + two_s);
    sum += add;
    if (k > 2 && std::abs(add) <= 1e-18 * std::abs(sum)) break;
    term *= (e + k) / (k + 1.0) * z;
    if (term == 0.0) break;
  }
  return sum;
}

/// Largest Taylor cutoff delta <= cap whose first omitted term is below budget.
inline double choose_inner_cutoff(const std::vector<double>& d, int order, double two_s,
                                  double cap, double budget) {
  const double d8 = std::abs(d[order + 8]);
  const double fact8 = 40320.0;
  double delta = cap;
  for (int j = 0; j < 200 && delta > 1e-8; ++j) {
    const double next = 2.0 * d8 * std::pow(delta, 8.0 - two_s) / (fact8 * (8.0 - two_s));
    if (next <= budget) break;
    delta *= 0.5;
  }
  return std::max(delta, 1e-8);
}

}  // namespace detail

/// L_s f^(order)(x) for a profile f, order in [0, 4].
template <typename Profile>
FracEval fraclap_deriv(const Profile& p, int order, double x, const QuadratureConfig& cfg) {
  if (order < 0 || order > 4) throw DomainError("fraclap_deriv: order must lie in [0, 4]");
  if (!std::isfinite(x)) throw DomainError("fraclap: x must be finite");
  cfg.validate();
  const double s = p.s(), two_s = 2.0 * s;

  FracEval ev;
  const std::vector<double> d = p.derivatives(x, order + 8);

  // Inner part.
  const auto knots = p.knots();
  double knot_distance = std::numeric_limits<double>::infinity();
  for (double k : knots) knot_distance = std::min(knot_distance, std::abs(x - k));
  const double cap = std::max(p.inner_cutoff_cap(), 0.5 * knot_distance);
  double delta = cfg.fixed_inner_cutoff;
  if (cfg.inner_policy == InnerCutoffPolicy::adaptive)
    delta = detail::choose_inner_cutoff(d, order, two_s, cap, 0.01 * cfg.tol_abs);

  const double d2 = d[order + 2], d4 = d[order + 4], d6 = d[order + 6], d8 = d[order + 8];
  ev.breakdown.inner = 2.0 * (d2 * std::pow(delta, 2.0 - two_s) / (2.0 * (2.0 - two_s)) +
                              d4 * std::pow(delta, 4.0 - two_s) / (24.0 * (4.0 - two_s)) +
                              d6 * std::pow(delta, 6.0 - two_s) / (720.0 * (6.0 - two_s)));
  const double inner_err =
      2.0 * std::abs(d8) * std::pow(delta, 8.0 - two_s) / (40320.0 * (8.0 - two_s));

  // Outer part.
  const double T = cfg.outer_margin * (std::abs(x) + p.reach());
  const PowerTail left = p.left_tail(order);
  const PowerTail right = p.right_tail(order);
  const double fx = d[order];
  const double t_pow = std::pow(T, -two_s);
  ev.breakdown.outer_constant = (left.anchor + right.anchor - 2.0 * fx) * t_pow / two_s;
  double outer_power = 0.0;
  for (const auto& term : left.terms)
    outer_power += term.coefficient * std::pow(T, -term.exponent) *
                   detail::tail_power_series(term.exponent, x / T, two_s);
  for (const auto& term : right.terms)
    outer_power += term.coefficient * std::pow(T, -term.exponent) *
                   detail::tail_power_series(term.exponent, -x / T, two_s);
  ev.breakdown.outer_power = outer_power * t_pow;

  // Middle part.
  const Split sx = p.split(x, order);
  const double exponent = -1.0 - two_s;
  ScalarFunction g = [&p, &sx, x, order, exponent](double t) {
    const Split a = p.split(x + t, order);
    const Split b = p.split(x - t, order);
    const double second =
        (a.anchor + b.anchor - 2.0 * sx.anchor) + (a.deviation + b.deviation - 2.0 * sx.deviation);
    return second * std::pow(t, exponent);
  };
  std::vector<double> breaks{delta, T};
  for (double k : knots) {
    const double t = std::abs(x - k);
    if (t > delta && t < T) breaks.push_back(t);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // Far from the bridge, x + t rounds to an absolute error of |x| eps, which
  // becomes relative noise wherever the profile varies on the unit scale. Stretches
  // where x + t or x - t comes within |x|/2 of the origin are therefore integrated
  // in y = x +- t, with the endpoints snapped onto the knots.
  const bool far = std::abs(x) > 2.0 * p.reach();
  const double near = 0.5 * std::abs(x);
  auto snap = [&knots, x](double y) {
    for (double k : knots)
      if (std::abs(y - k) <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) return k;
    return y;
  };
  std::vector<QuadraturePiece> pieces;
  std::vector<double> plain;
  auto flush_plain = [&]() {
    if (plain.size() >= 2) append_interval(pieces, g, plain);
    plain.clear();
  };
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const double a = breaks[j], b = breaks[j + 1];
    const bool plus_near = x + b > -near && x + a < near;
    const bool minus_near = x - a > -near && x - b < near;
    if (far && (plus_near || minus_near)) {
      flush_plain();
      const double sign = plus_near ? 1.0 : -1.0;
      double ya = snap(x + sign * a), yb = snap(x + sign * b);
      if (ya > yb) std::swap(ya, yb);
      ScalarFunction gy = [&p, &sx, x, order, exponent, sign](double y) {
        const double t = sign * (y - x);
        const Split a = p.split(y, order);
        const Split b = p.split(2.0 * x - y, order);
        const double second = (a.anchor + b.anchor - 2.0 * sx.anchor) +
                              (a.deviation + b.deviation - 2.0 * sx.deviation);
        return second * std::pow(t, exponent);
      };
      append_interval(pieces, gy, {ya, yb});
    } else {
      if (plain.empty() || plain.back() != a) {
        flush_plain();
        plain.push_back(a);
      }
      plain.push_back(b);
    }
  }
  flush_plain();
  QuadratureResult mid;
  try {
    mid = integrate_pieces(pieces, cfg);
  } catch (const ConvergenceError& e) {
    const double best = ev.breakdown.inner + e.best_estimate + ev.breakdown.outer_constant +
                        ev.breakdown.outer_power;
    throw ConvergenceError("fraclap: mid-range quadrature did not converge", best,
                           e.error_estimate + inner_err);
  }
  ev.breakdown.mid = mid.value;
  ev.panels = mid.panels;
  ev.inner_cutoff = delta;
  ev.outer_cutoff = T;
  ev.value = ev.breakdown.inner + ev.breakdown.mid + ev.breakdown.outer_constant +
             ev.breakdown.outer_power;
  ev.error_estimate = mid.error + inner_err;
  return ev;
}

template <typename Profile>
FracEval fraclap(const Profile& p, double x, const QuadratureConfig& cfg) {
  return fraclap_deriv(p, 0, x, cfg);
}

/// cfg with tol_abs scaled down to an expected magnitude of the result, so that
/// far-field values decaying like |x|^{-i-2s} keep their relative accuracy.
inline QuadratureConfig scaled_config(QuadratureConfig cfg, double magnitude) {
  if (magnitude > 0.0 && magnitude < 1.0) cfg.tol_abs *= magnitude;
  return cfg;
}

/// Config for L_s f^(order)(x) at large |x|, where the value decays like
/// |x|^{-order-2s} but for order >= 2 emerges from cancellation between parts of
/// size |x|^{-1-2s}. The tolerance tracks the value down to a roundoff floor set
/// by those parts.
inline QuadratureConfig far_field_config(const QuadratureConfig& cfg, double s, int order,
                                         double x) {
  const double ax = std::max(1.0, std::abs(x));
  const double value_scale = std::pow(ax, -order - 2.0 * s);
  const double parts_scale = std::pow(ax, -1.0 - 2.0 * s);
  const double floor = order >= 4 ? 0.1 : 1e-2;
  return scaled_config(cfg, std::max(value_scale, floor * parts_scale));
}

/// Closed form for u = (2/pi) arctan at s = 1/2: L_{1/2} u(x) = -sin(pi u(x)).
double fraclap_arctan_exact(double x);

}  // namespace fraclayer
