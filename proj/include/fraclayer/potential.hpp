#pragma once

// The potential built from a layer: h(r) = L_s phi(phi^{-1}(r)) and
// V(r) = int_{-1}^r h. V is integrated in x through r = phi(x), where the
// integrand L_s phi * phi' is smooth and the wells sit at x = -+infinity.

#include "fraclayer/fraclap.hpp"
#include "fraclayer/layer.hpp"
#include "fraclayer/quadrature.hpp"

#include <string>
#include <vector>

namespace fraclayer {

struct PotentialGridConfig {
  double x_far = 1e4;
  /// Odd, so that x = 0 is a node.
  int nodes = 2001;
  /// Truncation bound above which the model is flagged.
  double truncation_tol = 1e-6;

  void validate() const;
};

struct PotentialModel {
  /// phi(x_grid) with -1 and 1 appended at the ends.
  std::vector<double> r_grid;
  std::vector<double> v_values;
  std::vector<double> vprime_values;
  /// x of each interior r node.
  std::vector<double> x_grid;
  double x_far = 0.0;
  /// M int_{x_far}^inf t^{-2s} |phi'| summed over both sides, M the largest
  /// measured |x|^{2s} |L_s phi| on the last decade.
  double truncation_bound = 0.0;
  bool truncation_warning = false;
  /// Integrals beyond -x_far and x_far, included in V.
  double left_tail = 0.0;
  double right_tail = 0.0;
  LayerParams params;
  QuadratureConfig quadrature;
  std::vector<std::string> notes;

  double v_left() const { return v_values.front(); }
  double v_right() const { return v_values.back(); }
  double v_max() const;
  /// Cubic Hermite interpolation of V from values and slopes.
  double value(double r) const;
};

/// h(r) = L_s phi(phi^{-1}(r)).
double h_of_r(const Layer& layer, double r, const QuadratureConfig& cfg);

PotentialModel build_potential(const Layer& layer, const PotentialGridConfig& grid,
                               const QuadratureConfig& cfg);

/// int_{-inf}^X L_s phi(x) phi'(x) dx for X <= -kappa, i.e. V(phi(X)).
double potential_left_integral(const Layer& layer, double X, const QuadratureConfig& cfg);
/// int_X^inf L_s phi(x) phi'(x) dx for X >= kappa, i.e. V(1) - V(phi(X)).
double potential_right_integral(const Layer& layer, double X, const QuadratureConfig& cfg);

/// V^(k+1)(phi(x)) for k = 0..i, recovered from L_s phi^(k)(x) through the
/// higher-order chain rule. Requires |x| > 2 kappa, i in [0, 4].
std::vector<double> recover_Vderivs(const Layer& layer, double x, int i,
                                    const QuadratureConfig& cfg);
/// Last entry of recover_Vderivs: V^(i+1)(phi(x)).
double recover_Vderiv(const Layer& layer, double x, int i, const QuadratureConfig& cfg);

}  // namespace fraclayer
