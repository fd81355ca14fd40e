#include "fraclayer/layer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fraclayer {

namespace {

template <int N>
std::vector<double> jet_derivatives(const auto& f, double x, int max_order) {
  const auto r = f(Taylor<double, N>::variable(x));
  std::vector<double> out(max_order + 1);
  for (int k = 0; k <= max_order; ++k) out[k] = r.derivative(k);
  return out;
}

// Dispatches to the smallest jet order that covers max_order.
std::vector<double> derivatives_via_jets(const auto& f, double x, int max_order) {
  if (max_order <= 1) return jet_derivatives<1>(f, x, max_order);
  if (max_order <= 4) return jet_derivatives<4>(f, x, max_order);
  if (max_order <= 8) return jet_derivatives<8>(f, x, max_order);
  if (max_order <= 12) return jet_derivatives<12>(f, x, max_order);
  return jet_derivatives<16>(f, x, max_order);
}

void check_order(int max_order, int limit) {
  if (max_order < 0 || max_order > limit)
    throw DomainError("derivative order out of range: " + std::to_string(max_order));
}

}  // namespace

PowerTail differentiate_tail(const PowerTail& tail, int order, Side side) {
  if (order == 0) return tail;
  PowerTail d;
  d.anchor = 0.0;
  d.terms.reserve(tail.terms.size());
  for (const auto& t : tail.terms) {
    // d^n/dy^n |y|^{-e} = (e)_n |y|^{-e-n} on the left, (-1)^n (e)_n y^{-e-n} on the right.
    double c = t.coefficient * rising_factorial(t.exponent, order);
    if (side == Side::right && order % 2 == 1) c = -c;
    d.terms.push_back({c, t.exponent + order});
  }
  return d;
}

void LayerParams::validate() const {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("layer: s must lie in (0,1)");
  if (!(alpha > 0.0 && alpha <= 2.0 * s)) throw DomainError("layer: alpha must lie in (0, 2s]");
  if (!(beta > 0.0 && beta <= 2.0 * s)) throw DomainError("layer: beta must lie in (0, 2s]");
  if (!(kappa > 0.0)) throw DomainError("layer: kappa must be positive");
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw DomainError("layer: C1 and C2 must be positive");
  if (!(c1 * std::pow(kappa, -alpha) < 2.0))
    throw DomainError("layer: C1 kappa^-alpha must be < 2");
  if (!(c2 * std::pow(kappa, -beta) < 2.0))
    throw DomainError("layer: C2 kappa^-beta must be < 2");
}

Layer::Layer(const LayerParams& params) : params_(params) {
  params_.validate();
  const int n = 4096;
  const double lo = -10.0 * params_.kappa, hi = 10.0 * params_.kappa;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double d = derivatives(x, 1)[1];
    if (!(d > 0.0)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "layer: bridge is not strictly increasing, phi'(" << x << ") = " << d;
      throw ConstructionError(msg.str(), x);
    }
  }
  monotone_verified_ = true;
}

std::vector<double> Layer::bridge_derivatives(double x, int max_order) const {
  return derivatives_via_jets([this](const auto& t) { return bridge(t); }, x, max_order);
}

std::vector<double> Layer::raw_derivatives(double x, int max_order) const {
  const auto& p = params_;
  std::vector<double> out(max_order + 1);
  if (x <= -p.kappa) {
    const double ax = -x;
    out[0] = -1.0 + p.c1 * std::pow(ax, -p.alpha);
    for (int k = 1; k <= max_order; ++k)
      out[k] = p.c1 * rising_factorial(p.alpha, k) * std::pow(ax, -p.alpha - k);
    return out;
  }
  if (x >= p.kappa) {
    out[0] = 1.0 - p.c2 * std::pow(x, -p.beta);
    for (int k = 1; k <= max_order; ++k) {
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      out[k] = sign * p.c2 * rising_factorial(p.beta, k) * std::pow(x, -p.beta - k);
    }
    return out;
  }
  return bridge_derivatives(x, max_order);
}

std::vector<double> Layer::derivatives(double x, int max_order) const {
  check_order(max_order, max_derivative);
  if (params_.symmetric() && x < 0.0) {
    // Odd profile: phi^(k)(-x) = (-1)^{k+1} phi^(k)(x).
    auto d = raw_derivatives(-x, max_order);
    for (int k = 0; k <= max_order; ++k)
      if (k % 2 == 0) d[k] = -d[k];
    return d;
  }
  return raw_derivatives(x, max_order);
}

double Layer::phi(double x) const { return split(x, 0).value(); }

double Layer::phi_deriv(double x, int order) const {
  if (order < 1 || order > 6) throw DomainError("phi_deriv: order must lie in [1, 6]");
  return derivatives(x, order)[order];
}

Split Layer::split(double y, int order) const {
  check_order(order, max_derivative);
  const auto& p = params_;
  if (p.symmetric() && y < 0.0) {
    Split r = split(-y, order);
    if (order % 2 == 0) {
      r.anchor = -r.anchor;
      r.deviation = -r.deviation;
    }
    return r;
  }
  if (y <= -p.kappa) {
    const double ax = -y;
    if (order == 0) return {-1.0, p.c1 * std::pow(ax, -p.alpha)};
    return {0.0, p.c1 * rising_factorial(p.alpha, order) * std::pow(ax, -p.alpha - order)};
  }
  if (y >= p.kappa) {
    if (order == 0) return {1.0, -p.c2 * std::pow(y, -p.beta)};
    const double sign = (order % 2 == 1) ? 1.0 : -1.0;
    return {0.0, sign * p.c2 * rising_factorial(p.beta, order) * std::pow(y, -p.beta - order)};
  }
  if (order == 0) return {0.0, bridge(y)};
  return {0.0, bridge_derivatives(y, order)[order]};
}

PowerTail Layer::left_tail(int order) const {
  PowerTail t{-1.0, {{params_.c1, params_.alpha}}};
  return differentiate_tail(t, order, Side::left);
}

PowerTail Layer::right_tail(int order) const {
  PowerTail t{1.0, {{-params_.c2, params_.beta}}};
  return differentiate_tail(t, order, Side::right);
}

std::vector<double> Layer::knots() const {
  const double k = params_.kappa, w = window();
  return {-k, -k + w, 0.0, k - w, k};
}

double Layer::phi_inverse(double r) const {
  if (!(r > -1.0 && r < 1.0)) throw DomainError("phi_inverse: r must lie in (-1, 1)");
  const auto& p = params_;
  if (p.symmetric() && r < 0.0) return -phi_inverse(-r);
  const double left_edge = -1.0 + p.c1 * std::pow(p.kappa, -p.alpha);
  const double right_edge = 1.0 - p.c2 * std::pow(p.kappa, -p.beta);
  if (r <= left_edge) return -std::pow(p.c1 / (1.0 + r), 1.0 / p.alpha);
  if (r >= right_edge) return std::pow(p.c2 / (1.0 - r), 1.0 / p.beta);

  // Safeguarded Newton on the bridge.
  double lo = -p.kappa, hi = p.kappa;
  double x = lo + (hi - lo) * (r - left_edge) / (right_edge - left_edge);
  for (int it = 0; it < 200; ++it) {
    const auto d = derivatives(x, 1);
    const double f = d[0] - r;
    if (f == 0.0) return x;
    if (f < 0.0) lo = x; else hi = x;
    double next = x - f / d[1];
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-16) return next;
    x = next;
  }
  return x;
}

// --- arctan -------------------------------------------------------------

namespace {
constexpr double two_over_pi = 2.0 / std::numbers::pi;
}

double ArctanLayer::u(double x) const { return two_over_pi * std::atan(x); }

double ArctanLayer::u_prime(double x) const { return two_over_pi / (1.0 + x * x); }

double ArctanLayer::u_inverse(double r) const {
  if (!(r > -1.0 && r < 1.0)) throw DomainError("u_inverse: r must lie in (-1, 1)");
  return std::tan(0.5 * std::numbers::pi * r);
}

double ArctanLayer::phi_deriv(double x, int order) const {
  if (order < 1 || order > 6) throw DomainError("phi_deriv: order must lie in [1, 6]");
  return derivatives(x, order)[order];
}

std::vector<double> ArctanLayer::derivatives(double x, int max_order) const {
  check_order(max_order, max_derivative);
  return derivatives_via_jets([](const auto& t) { return two_over_pi * atan(t); }, x,
                              max_order);
}

Split ArctanLayer::split(double y, int order) const {
  check_order(order, max_derivative);
  if (order == 0) {
    if (y >= 1.0) return {1.0, -two_over_pi * std::atan(1.0 / y)};
    if (y <= -1.0) return {-1.0, two_over_pi * std::atan(-1.0 / y)};
    return {0.0, u(y)};
  }
  return {0.0, derivatives(y, order)[order]};
}

PowerTail ArctanLayer::left_tail(int order) const {
  // u(y) = -1 + (2/pi) atan(1/|y|) = -1 + (2/pi) sum_k (-1)^k |y|^{-(2k+1)} / (2k+1).
  PowerTail t{-1.0, {}};
  for (int k = 0; k < tail_terms; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    t.terms.push_back({sign * two_over_pi / (2 * k + 1), 2.0 * k + 1.0});
  }
  return differentiate_tail(t, order, Side::left);
}

PowerTail ArctanLayer::right_tail(int order) const {
  PowerTail t{1.0, {}};
  for (int k = 0; k < tail_terms; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    t.terms.push_back({sign * two_over_pi / (2 * k + 1), 2.0 * k + 1.0});
  }
  return differentiate_tail(t, order, Side::right);
}

double ArctanLayer::fraclap_exact(double x) const { return -std::sin(std::numbers::pi * u(x)); }

double ArctanLayer::potential(double r) const {
  return (std::cos(std::numbers::pi * r) + 1.0) / std::numbers::pi;
}

ArctanLayer arctan_layer() { return {}; }

}  // namespace fraclayer
