#include "fraclayer/potential.hpp"

#include <algorithm>
#include <cmath>

namespace fraclayer {

namespace {

constexpr int potential_interval_order = 8;

double scaled_fraclap(const Layer& layer, int order, double x, const QuadratureConfig& cfg) {
  return fraclap_deriv(layer, order, x, far_field_config(cfg, layer.s(), order, x)).value;
}

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

void PotentialGridConfig::validate() const {
  if (!(x_far > 0.0)) throw DomainError("potential grid: x_far must be positive");
  if (nodes < 5 || nodes % 2 == 0) throw DomainError("potential grid: nodes must be odd and >= 5");
  if (!(truncation_tol > 0.0)) throw DomainError("potential grid: truncation_tol must be positive");
}

double PotentialModel::v_max() const { return *std::max_element(v_values.begin(), v_values.end()); }

double PotentialModel::value(double r) const {
  if (!(r >= -1.0 && r <= 1.0)) throw DomainError("PotentialModel::value: r must lie in [-1, 1]");
  auto it = std::upper_bound(r_grid.begin(), r_grid.end(), r);
  if (it == r_grid.end()) return v_values.back();
  const std::size_t j = std::max<std::ptrdiff_t>(1, it - r_grid.begin());
  const double r0 = r_grid[j - 1], r1 = r_grid[j], h = r1 - r0;
  const double t = (r - r0) / h;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  return h00 * v_values[j - 1] + h10 * h * vprime_values[j - 1] + h01 * v_values[j] +
         h11 * h * vprime_values[j];
}

double h_of_r(const Layer& layer, double r, const QuadratureConfig& cfg) {
  return scaled_fraclap(layer, 0, layer.phi_inverse(r), cfg);
}

double potential_left_integral(const Layer& layer, double X, const QuadratureConfig& cfg) {
  const auto& p = layer.params();
  if (!(X <= -p.kappa)) throw DomainError("potential_left_integral: X must be <= -kappa");
  ScalarFunction f = [&layer, &cfg](double x) {
    return scaled_fraclap(layer, 0, x, cfg) * layer.derivatives(x, 1)[1];
  };
  std::vector<QuadraturePiece> pieces;
  append_lower_tail(pieces, f, X, 1.0 + 2.0 * p.s + p.alpha);
  const double mag = p.c1 * std::pow(-X, -2.0 * p.s - p.alpha);
  return integrate_pieces(pieces, scaled_config(cfg, mag)).value;
}

double potential_right_integral(const Layer& layer, double X, const QuadratureConfig& cfg) {
  const auto& p = layer.params();
  if (!(X >= p.kappa)) throw DomainError("potential_right_integral: X must be >= kappa");
  ScalarFunction f = [&layer, &cfg](double x) {
    return scaled_fraclap(layer, 0, x, cfg) * layer.derivatives(x, 1)[1];
  };
  std::vector<QuadraturePiece> pieces;
  append_upper_tail(pieces, f, X, 1.0 + 2.0 * p.s + p.beta);
  const double mag = p.c2 * std::pow(X, -2.0 * p.s - p.beta);
  return integrate_pieces(pieces, scaled_config(cfg, mag)).value;
}

PotentialModel build_potential(const Layer& layer, const PotentialGridConfig& grid,
                               const QuadratureConfig& cfg) {
  grid.validate();
  cfg.validate();
  const auto& p = layer.params();
  const double two_s = 2.0 * p.s;
  const int n = grid.nodes;
  const double c = p.kappa;
  const double xi_max = std::asinh(grid.x_far / c);
  const double hxi = 2.0 * xi_max / (n - 1);

  std::vector<double> x(n), g(n);
  for (int j = 0; j < n; ++j) {
    const double xi = -xi_max + hxi * j;
    x[j] = (j == 0) ? -grid.x_far : (j == n - 1) ? grid.x_far : c * std::sinh(xi);
    if (j == (n - 1) / 2) x[j] = 0.0;
    g[j] = scaled_fraclap(layer, 0, x[j], cfg);
  }

  // Composite Gauss-Legendre in xi, one fixed-order rule per grid interval.
  // The integrand has steep but smooth features on the bridge, which a
  // Simpson rule on the node values alone does not resolve.
  const GaussRule& rule = gauss_legendre(potential_interval_order);
  std::vector<double> cum(n, 0.0);
  for (int j = 0; j + 1 < n; ++j) {
    const double a = -xi_max + hxi * j;
    double sum = 0.0;
    for (int q = 0; q < rule.order; ++q) {
      const double xi = a + 0.5 * hxi * (rule.nodes[q] + 1.0);
      const double xq = c * std::sinh(xi);
      sum += rule.weights[q] * scaled_fraclap(layer, 0, xq, cfg) * layer.derivatives(xq, 1)[1] *
             c * std::cosh(xi);
    }
    cum[j + 1] = cum[j] + 0.5 * hxi * sum;
  }

  PotentialModel m;
  m.params = p;
  m.quadrature = cfg;
  m.x_far = grid.x_far;
  m.left_tail = potential_left_integral(layer, -grid.x_far, cfg);
  m.right_tail = potential_right_integral(layer, grid.x_far, cfg);

  double M = 0.0;
  for (int j = 0; j < n; ++j)
    if (std::abs(x[j]) >= 0.1 * grid.x_far)
      M = std::max(M, std::pow(std::abs(x[j]), two_s) * std::abs(g[j]));
  m.truncation_bound =
      M * (p.alpha * p.c1 * std::pow(grid.x_far, -two_s - p.alpha) / (two_s + p.alpha) +
           p.beta * p.c2 * std::pow(grid.x_far, -two_s - p.beta) / (two_s + p.beta));
  m.truncation_warning = m.truncation_bound > grid.truncation_tol;

  m.r_grid.reserve(n + 2);
  m.r_grid.push_back(-1.0);
  m.v_values.push_back(0.0);
  m.vprime_values.push_back(0.0);
  for (int j = 0; j < n; ++j) {
    const double r = layer.phi(x[j]);
    if (!(r > m.r_grid.back())) throw DomainError("build_potential: r grid is not increasing");
    m.r_grid.push_back(r);
    m.x_grid.push_back(x[j]);
    m.v_values.push_back(m.left_tail + cum[j]);
    m.vprime_values.push_back(g[j]);
  }
  m.r_grid.push_back(1.0);
  m.v_values.push_back(m.left_tail + cum[n - 1] + m.right_tail);
  m.vprime_values.push_back(0.0);

  m.notes.push_back("V(-1) := 0; V(1) is the full integral and is not forced");
  m.notes.push_back("h(-1) := 0 and h(1) := 0 close the V' grid (continuous extension)");
  m.notes.push_back("integrals beyond +-x_far computed by tail-mapped quadrature");
  if (m.truncation_warning) m.notes.push_back("truncation bound exceeds truncation_tol");
  return m;
}

std::vector<double> recover_Vderivs(const Layer& layer, double x, int i,
                                    const QuadratureConfig& cfg) {
  if (i < 0 || i > 4) throw DomainError("recover_Vderiv: i must lie in [0, 4]");
  if (!(std::abs(x) > 2.0 * layer.params().kappa))
    throw DomainError("recover_Vderiv: requires |x| > 2 kappa");
  const std::vector<double> d = layer.derivatives(x, std::max(i, 1));

  // vd[k] = V^(k+1)(phi(x)).
  std::vector<double> vd(i + 1);
  vd[0] = scaled_fraclap(layer, 0, x, cfg);
  for (int k = 1; k <= i; ++k) {
    double rest = 0.0;
    for (const auto& m : partitions_weighted(k)) {
      if (m[0] == k) continue;
      int total = 0;
      double coef = factorial(k), prod = 1.0;
      for (int j = 1; j <= k; ++j) {
        if (m[j - 1] == 0) continue;
        total += m[j - 1];
        coef /= factorial(m[j - 1]);
        prod *= std::pow(d[j] / factorial(j), m[j - 1]);
      }
      rest += coef * vd[total] * prod;
    }
    vd[k] = (scaled_fraclap(layer, k, x, cfg) - rest) / std::pow(d[1], k);
  }
  return vd;
}

double recover_Vderiv(const Layer& layer, double x, int i, const QuadratureConfig& cfg) {
  return recover_Vderivs(layer, x, i, cfg).back();
}

}  // namespace fraclayer
