#pragma once

// Poisson extension of a boundary profile v to the upper half-plane,
//
//   u(x, y) = int P_s(tau, y) v(x - tau) dtau,   P_s(tau, y) = p_s y^{2s} / (tau^2 + y^2)^{(1+2s)/2},
//
// its conjugate w = y^{1-2s} du/dy, and the Hamiltonian-type inequality along
// vertical segments. In the scaled variable xi = tau / y the kernel is
// H_s(xi) = p_s / (1 + xi^2)^{(1+2s)/2}.

#include "fraclayer/layer.hpp"
#include "fraclayer/quadrature.hpp"

#include <functional>
#include <vector>

namespace fraclayer {

struct ExtensionConstants {
  double s = 0.5;
  /// Gamma((1+2s)/2) / (sqrt(pi) Gamma(s)), fixed by int P_s(., y) = 1.
  double p_s = 0.0;
  double q_s = 0.0;
  /// 2^{2s-1} Gamma(s) / Gamma(1-2s); zero at s = 1/2.
  double d_s = 0.0;
  /// 1 / (2 s p_s), the ratio used in the Hamiltonian inequality.
  double ds_over_qs = 0.0;
  /// Closed form Gamma((1+2s)/2) Gamma(1-2s) / (sqrt(pi) Gamma(1-s) Gamma(s)),
  /// kept for comparison with p_s. Infinite at s = 1/2.
  double p_s_closed_form = 0.0;
};

ExtensionConstants extension_constants(double s);

/// H_s(xi).
double kernel_h(double s, double xi);
/// int_R H_s by quadrature; 1 up to quadrature error.
double kernel_h_integral(double s, const QuadratureConfig& cfg);

/// What the extension code needs to know about a boundary profile.
struct BoundaryData {
  ScalarFunction v;
  /// v'; used by the Hamiltonian integrand.
  ScalarFunction dv;
  /// L_s v; used by the representation formula for w.
  ScalarFunction lsv;
  /// Points where v changes character (bridge knots); used as breakpoints.
  std::vector<double> knots;
};

/// Arctan profile with its closed-form L_{1/2}.
BoundaryData boundary_data(const ArctanLayer& u);
/// Layer profile; L_s phi evaluated by quadrature with cfg. The layer must outlive the result.
BoundaryData boundary_data(const Layer& layer, const QuadratureConfig& cfg);

/// u(x, y), y > 0.
double extend(const BoundaryData& v, double s, double x, double y, const QuadratureConfig& cfg);
/// du/dx = int P_s(tau, y) v'(x - tau) dtau.
double extend_dx(const BoundaryData& v, double s, double x, double y, const QuadratureConfig& cfg);
/// du/dy = -(1/y) int tau P_s(tau, y) v'(x - tau) dtau.
double extend_dy(const BoundaryData& v, double s, double x, double y, const QuadratureConfig& cfg);

enum class WMethod { finite_difference, representation };

/// w(x, y) = y^{1-2s} du/dy.
///   finite_difference: central differences at h = y/100 and y/200, Richardson-combined;
///   representation:    2 s p_s int H_{1-s}(xi) L_s v(x - y xi) dxi.
double w_eval(const BoundaryData& v, double s, double x, double y, const QuadratureConfig& cfg,
              WMethod method);

struct ExtensionSample {
  double x = 0.0;
  double y = 0.0;
  double u_bar = 0.0;
  double w_fd = 0.0;
  double w_repr = 0.0;
};

ExtensionSample extension_sample(const BoundaryData& v, double s, double x, double y,
                                 const QuadratureConfig& cfg);

struct HamiltonianResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = (d_s/q_s) int_0^y (t^{1-2s}/2)(u_x^2 - u_y^2)(x, t) dt,
/// rhs = G(v(x)) - G(1), holds = lhs < rhs.
HamiltonianResult hamiltonian_check(const BoundaryData& v, const std::function<double(double)>& G,
                                    double s, double x, double y, const QuadratureConfig& cfg);

}  // namespace fraclayer
