#pragma once

// Gauss-Legendre panels with global adaptive bisection.

#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclayer {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  int order = 0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Golub-Welsch eigenvalues polished by Newton steps on P_n. Rules are cached
/// per order; the returned reference stays valid for the program lifetime.
const GaussRule& gauss_legendre(int order);

/// How the inner cutoff of the fractional Laplacian is chosen.
enum class InnerCutoffPolicy {
  adaptive,  // largest cutoff whose first omitted Taylor term is below tolerance
  fixed,     // QuadratureConfig::fixed_inner_cutoff
};

struct QuadratureConfig {
  double tol_abs = 1e-11;
  double tol_rel = 1e-10;
  int panel_order = 20;
  int max_panels = 4096;
  InnerCutoffPolicy inner_policy = InnerCutoffPolicy::adaptive;
  double fixed_inner_cutoff = 1e-3;
  /// Outer truncation T = outer_margin * (|x| + reach of the profile's bridge).
  double outer_margin = 2.0;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

/// Raised when the panel budget runs out; carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best, double error)
      : std::runtime_error(what), best_estimate(best), error_estimate(error) {}
  double best_estimate;
  double error_estimate;
};

using ScalarFunction = std::function<double(double)>;

/// One integration piece: g integrated over [a, b] in its own variable.
struct QuadraturePiece {
  ScalarFunction g;
  double a = 0.0;
  double b = 0.0;
};

/// Integrates the sum of all pieces to max(tol_abs, tol_rel |value|), bisecting
/// the panel with the largest error first. Each panel's error is the difference
/// between its one-panel and two-half-panel Gauss values.
QuadratureResult integrate_pieces(const std::vector<QuadraturePiece>& pieces,
                                  const QuadratureConfig& cfg);

/// int_a^b f(t) dt.
QuadratureResult adaptive_panel_integrate(const ScalarFunction& f, double a, double b,
                                          const QuadratureConfig& cfg);

/// Appends pieces covering [a, b] split at the sorted breakpoints. Subintervals
/// of one sign spanning more than a factor 4 are integrated in log t.
void append_interval(std::vector<QuadraturePiece>& pieces, const ScalarFunction& f,
                     std::vector<double> breaks);

/// Appends int_a^inf f(t) dt (a > 0) through t = a w^{-1/(p-1)}, which makes an
/// integrand decaying like t^{-p} (p > 1) constant in w.
void append_upper_tail(std::vector<QuadraturePiece>& pieces, const ScalarFunction& f,
                       double a, double decay);

/// Appends int_{-inf}^b f(t) dt (b < 0), same map mirrored.
void append_lower_tail(std::vector<QuadraturePiece>& pieces, const ScalarFunction& f,
                       double b, double decay);

/// Convenience: int over [breaks.front(), breaks.back()] with log-aware splitting.
QuadratureResult integrate_breaks(const ScalarFunction& f, std::vector<double> breaks,
                                  const QuadratureConfig& cfg);

}  // namespace fraclayer
