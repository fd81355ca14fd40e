#include "fraclayer/extension.hpp"

#include "fraclayer/fraclap.hpp"
#include "fraclayer/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fraclayer {

namespace {

constexpr double pi = std::numbers::pi;

/// 1/Gamma(z) for z > -1, zero at z = 0.
double reciprocal_gamma(double z) {
  if (z > 0.0) return 1.0 / gamma(z);
  if (z == 0.0) return 0.0;
  return gamma(1.0 - z) * std::sin(pi * z) / pi;
}

double p_of(double s) { return gamma(s + 0.5) / (std::sqrt(pi) * gamma(s)); }

/// int K(tau) f(x - tau) dtau over R, K concentrated on the scale y and
/// decaying like |tau|^{-decay} at both ends.
double convolve(const std::function<double(double)>& K, const ScalarFunction& f,
                const std::vector<double>& knots, double x, double y, double decay,
                const QuadratureConfig& cfg) {
  ScalarFunction g = [&K, &f, x](double tau) { return K(tau) * f(x - tau); };
  double reach = y;
  std::vector<double> breaks{-y, 0.0, y};
  for (double k : knots) {
    breaks.push_back(x - k);
    reach = std::max(reach, std::abs(x - k));
  }
  const double R = 2.0 * reach + y;
  breaks.push_back(-R);
  breaks.push_back(R);
  std::vector<QuadraturePiece> pieces;
  append_interval(pieces, g, breaks);
  append_upper_tail(pieces, g, R, decay);
  append_lower_tail(pieces, g, -R, decay);
  return integrate_pieces(pieces, cfg).value;
}

std::function<double(double)> poisson_kernel(double s, double y) {
  const double c = p_of(s) * std::pow(y, 2.0 * s);
  const double e = -0.5 * (1.0 + 2.0 * s);
  return [c, e, y](double tau) { return c * std::pow(tau * tau + y * y, e); };
}

}  // namespace

ExtensionConstants extension_constants(double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("extension_constants: s must lie in (0,1)");
  ExtensionConstants c;
  c.s = s;
  c.p_s = p_of(s);
  c.q_s = s * (1.0 - s) * std::pow(2.0, 2.0 * s) * gamma(0.5 + s) / (std::sqrt(pi) * gamma(2.0 - s));
  c.d_s = std::pow(2.0, 2.0 * s - 1.0) * gamma(s) * reciprocal_gamma(1.0 - 2.0 * s);
  c.ds_over_qs = 1.0 / (2.0 * s * c.p_s);
  const double rg = reciprocal_gamma(1.0 - 2.0 * s);
  c.p_s_closed_form = (rg == 0.0) ? std::numeric_limits<double>::infinity()
                                  : gamma(0.5 + s) / (rg * std::sqrt(pi) * gamma(1.0 - s) * gamma(s));
  return c;
}

double kernel_h(double s, double xi) {
  return p_of(s) * std::pow(1.0 + xi * xi, -0.5 * (1.0 + 2.0 * s));
}

double kernel_h_integral(double s, const QuadratureConfig& cfg) {
  ScalarFunction h = [s](double xi) { return kernel_h(s, xi); };
  std::vector<QuadraturePiece> pieces;
  append_interval(pieces, h, {0.0, 1.0});
  append_upper_tail(pieces, h, 1.0, 1.0 + 2.0 * s);
  return 2.0 * integrate_pieces(pieces, cfg).value;
}

BoundaryData boundary_data(const ArctanLayer& u) {
  return {[u](double x) { return u.u(x); }, [u](double x) { return u.u_prime(x); },
          [u](double x) { return u.fraclap_exact(x); }, u.knots()};
}

BoundaryData boundary_data(const Layer& layer, const QuadratureConfig& cfg) {
  const Layer* l = &layer;
  return {[l](double x) { return l->phi(x); }, [l](double x) { return l->derivatives(x, 1)[1]; },
          [l, cfg](double x) {
            return fraclap(*l, x, far_field_config(cfg, l->s(), 0, x)).value;
          },
          layer.knots()};
}

double extend(const BoundaryData& v, double s, double x, double y, const QuadratureConfig& cfg) {
  if (!(y > 0.0)) throw DomainError("extend: y must be positive");
  return convolve(poisson_kernel(s, y), v.v, v.knots, x, y, 1.0 + 2.0 * s, cfg);
}

double extend_dx(const BoundaryData& v, double s, double x, double y,
                 const QuadratureConfig& cfg) {
  if (!(y > 0.0)) throw DomainError("extend_dx: y must be positive");
  return convolve(poisson_kernel(s, y), v.dv, v.knots, x, y, 1.0 + 2.0 * s, cfg);
}

double extend_dy(const BoundaryData& v, double s, double x, double y,
                 const QuadratureConfig& cfg) {
  if (!(y > 0.0)) throw DomainError("extend_dy: y must be positive");
  const auto P = poisson_kernel(s, y);
  auto K = [&P, y](double tau) { return -tau * P(tau) / y; };
  return convolve(K, v.dv, v.knots, x, y, 1.0 + 2.0 * s, cfg);
}

double w_eval(const BoundaryData& v, double s, double x, double y, const QuadratureConfig& cfg,
              WMethod method) {
  if (!(y > 0.0)) throw DomainError("w_eval: y must be positive");
  if (method == WMethod::representation) {
    const auto P = poisson_kernel(1.0 - s, y);
    return 2.0 * s * p_of(s) * convolve(P, v.lsv, v.knots, x, y, 3.0 - 2.0 * s, cfg);
  }
  const double h = y / 100.0;
  QuadratureConfig fine = cfg;
  fine.tol_abs = cfg.tol_abs * h;
  fine.tol_rel = std::max(1e-13, cfg.tol_rel * h);
  auto central = [&](double step) {
    return (extend(v, s, x, y + step, fine) - extend(v, s, x, y - step, fine)) / (2.0 * step);
  };
  const double d1 = central(h), d2 = central(0.5 * h);
  return std::pow(y, 1.0 - 2.0 * s) * (4.0 * d2 - d1) / 3.0;
}

ExtensionSample extension_sample(const BoundaryData& v, double s, double x, double y,
                                 const QuadratureConfig& cfg) {
  ExtensionSample e;
  e.x = x;
  e.y = y;
  e.u_bar = extend(v, s, x, y, cfg);
  e.w_fd = w_eval(v, s, x, y, cfg, WMethod::finite_difference);
  e.w_repr = v.lsv ? w_eval(v, s, x, y, cfg, WMethod::representation)
                   : std::numeric_limits<double>::quiet_NaN();
  return e;
}

HamiltonianResult hamiltonian_check(const BoundaryData& v, const std::function<double(double)>& G,
                                    double s, double x, double y, const QuadratureConfig& cfg) {
  if (!(y > 0.0)) throw DomainError("hamiltonian_check: y must be positive");
  const ExtensionConstants c = extension_constants(s);
  // t = y u^{1/(2s)} absorbs the t^{2s-1} behaviour of t^{1-2s} u_y^2 at t = 0.
  const double q = 1.0 / (2.0 * s);
  ScalarFunction f = [&](double u) {
    const double t = y * std::pow(u, q);
    const double dt_du = y * q * std::pow(u, q - 1.0);
    const double ux = extend_dx(v, s, x, t, cfg);
    const double uy = extend_dy(v, s, x, t, cfg);
    return 0.5 * std::pow(t, 1.0 - 2.0 * s) * (ux * ux - uy * uy) * dt_du;
  };
  HamiltonianResult r;
  r.lhs = c.ds_over_qs * adaptive_panel_integrate(f, 0.0, 1.0, cfg).value;
  r.rhs = G(v.v(x)) - G(1.0);
  r.holds = r.lhs < r.rhs;
  return r;
}

}  // namespace fraclayer
