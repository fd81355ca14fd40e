#pragma once

// Power-tail transition layers.
//
//   phi(x) = -1 + C1 |x|^{-alpha}   for x <= -kappa,
//   phi(x) =  1 - C2  x^{-beta}     for x >=  kappa,
//
// joined on (-kappa, kappa) by a C-infinity, strictly increasing bridge.
// Both layer types here expose the same "profile" surface consumed by the
// fractional Laplacian, potential and extension code: values split into an
// exact anchor plus a small deviation, derivative stacks, and exact power-law
// tail expansions.

#include "fraclayer/numerics.hpp"
#include "fraclayer/taylor.hpp"

#include <Eigen/Core>

#include <cmath>
#include <string>
#include <vector>

namespace fraclayer {

/// f(y) = anchor + deviation, with the anchor one of -1, 0, +1. Second
/// differences of profiles that approach +-1 are formed from the deviations so
/// that the +-1 cancel exactly.
struct Split {
  double anchor = 0.0;
  double deviation = 0.0;
  double value() const { return anchor + deviation; }
};

struct PowerTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// f(y) = anchor + sum_j c_j |y|^{-e_j} beyond the tail edge on one side.
struct PowerTail {
  double anchor = 0.0;
  std::vector<PowerTerm> terms;
};

enum class Side { left, right };

/// Termwise order-th derivative of a tail expansion on the given side.
PowerTail differentiate_tail(const PowerTail& tail, int order, Side side);

struct LayerParams {
  double s = 0.5;
  double alpha = 1.0;
  double beta = 1.0;
  double kappa = 1.5;
  double c1 = 1.0;
  double c2 = 1.0;

  void validate() const;
  bool symmetric() const { return alpha == beta && c1 == c2; }
};

/// Raised when the bridge fails the construction-time monotonicity check.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, double x) : std::runtime_error(what), where(x) {}
  double where;
};

class Layer {
 public:
  static constexpr int max_derivative = 16;

  /// Validates the parameters and checks phi' > 0 on 4096 points of [-10 kappa, 10 kappa].
  explicit Layer(const LayerParams& params);

  const LayerParams& params() const { return params_; }
  double s() const { return params_.s; }
  bool monotone_verified() const { return monotone_verified_; }

  /// Width of the smooth leveling windows inside the bridge.
  double window() const { return 0.25 * params_.kappa; }
  /// Half-width of the region where the bridge may influence anything.
  double margin() const { return 0.5 * params_.kappa; }
  double reach() const { return params_.kappa + margin(); }

  double phi(double x) const;
  /// phi^(order)(x), order in [1, 6].
  double phi_deriv(double x, int order) const;
  /// phi^(k)(x) for k = 0..max_order (max_order <= 16).
  std::vector<double> derivatives(double x, int max_order) const;
  /// The unique x with phi(x) = r, r in (-1, 1).
  double phi_inverse(double r) const;

  /// phi^(order)(y) as anchor + deviation.
  Split split(double y, int order) const;
  /// Exact tail expansions of phi^(order): valid for y <= -kappa (left) and y >= kappa (right).
  PowerTail left_tail(int order) const;
  PowerTail right_tail(int order) const;

  /// Points where the bridge changes character.
  std::vector<double> knots() const;
  /// Upper bound on the inner Taylor cutoff of the fractional Laplacian.
  double inner_cutoff_cap() const { return window() / 40.0; }

  /// The bridge formula; valid for any real x, equal to the tails outside (-kappa, kappa).
  template <typename S>
  S bridge(const S& x) const {
    using std::pow;
    const double k = params_.kappa, w = window(), level = k - w;
    const S rho_left = smooth_step((x + k) / w);
    const S m_left = (1.0 - rho_left) * (-x) + rho_left * level;
    const S rho_right = smooth_step((k - x) / w);
    const S m_right = (1.0 - rho_right) * x + rho_right * level;
    const S left = -1.0 + params_.c1 * pow(m_left, -params_.alpha);
    const S right = 1.0 - params_.c2 * pow(m_right, -params_.beta);
    const S sigma = smooth_step((x + k) / (2.0 * k));
    return (1.0 - sigma) * left + sigma * right;
  }

 private:
  std::vector<double> bridge_derivatives(double x, int max_order) const;
  std::vector<double> raw_derivatives(double x, int max_order) const;

  LayerParams params_;
  bool monotone_verified_ = false;
};

/// u(x) = (2/pi) arctan(x), the s = 1/2 profile with a closed-form fractional
/// Laplacian. Exposes the same profile surface as Layer.
class ArctanLayer {
 public:
  static constexpr int max_derivative = 16;
  static constexpr int tail_terms = 16;

  double s() const { return 0.5; }
  double reach() const { return 2.0; }

  double u(double x) const;
  double u_prime(double x) const;
  double u_inverse(double r) const;

  double phi(double x) const { return u(x); }
  double phi_deriv(double x, int order) const;
  std::vector<double> derivatives(double x, int max_order) const;
  double phi_inverse(double r) const { return u_inverse(r); }

  Split split(double y, int order) const;
  /// Series in 1/|y|, valid for |y| > 1.
  PowerTail left_tail(int order) const;
  PowerTail right_tail(int order) const;
  std::vector<double> knots() const { return {-1.0, 0.0, 1.0}; }
  double inner_cutoff_cap() const { return 1e-2; }

  /// L_{1/2} u(x) = -sin(pi u(x)) for the operator without normalizing constant.
  double fraclap_exact(double x) const;
  /// Potential with G' = L_{1/2}u o u^{-1}, G(+-1) = 0: (1/pi)(cos(pi r) + 1).
  double potential(double r) const;
};

ArctanLayer arctan_layer();

/// Vectorized phi over a grid.
template <typename Profile>
Eigen::ArrayXd phi(const Profile& p, const Eigen::ArrayXd& x) {
  return x.unaryExpr([&p](double t) { return p.phi(t); });
}

}  // namespace fraclayer
