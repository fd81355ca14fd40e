#include "fraclayer/quadrature.hpp"

#include "fraclayer/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>

namespace fraclayer {

namespace {

GaussRule compute_rule(int n) {
  // Jacobi matrix of the Legendre recurrence.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Eigen::VectorXd x = es.eigenvalues();

  // Newton polish on P_n; weights from P_n'.
  GaussRule rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = x[i];
    double dp = 1.0;
    for (int it = 0; it < 3; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      t -= p1 / dp;
    }
    rule.nodes[i] = t;
    rule.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  // Exact symmetry.
  for (int i = 0; i < n / 2; ++i) {
    const double xs = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    const double ws = 0.5 * (rule.weights[n - 1 - i] + rule.weights[i]);
    rule.nodes[i] = -xs;
    rule.nodes[n - 1 - i] = xs;
    rule.weights[i] = ws;
    rule.weights[n - 1 - i] = ws;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct Panel {
  int piece;
  double a, b;
  double left, right;  // Gauss values of the two halves
  double error;
  double value() const { return left + right; }
  bool operator<(const Panel& o) const { return error < o.error; }
};

double gauss(const ScalarFunction& g, double a, double b, const GaussRule& r) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < r.order; ++i) s += r.weights[i] * g(c + h * r.nodes[i]);
  return s * h;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussRule>(compute_rule(order));
  return *slot;
}

void QuadratureConfig::validate() const {
  if (!(tol_abs > 0.0) || !(tol_rel > 0.0))
    throw DomainError("QuadratureConfig: tolerances must be positive");
  if (panel_order < 8) throw DomainError("QuadratureConfig: panel_order must be >= 8");
  if (max_panels < 1) throw DomainError("QuadratureConfig: max_panels must be positive");
  if (!(outer_margin >= 1.0)) throw DomainError("QuadratureConfig: outer_margin must be >= 1");
  if (inner_policy == InnerCutoffPolicy::fixed && !(fixed_inner_cutoff > 0.0))
    throw DomainError("QuadratureConfig: fixed inner cutoff must be positive");
}

QuadratureResult integrate_pieces(const std::vector<QuadraturePiece>& pieces,
                                  const QuadratureConfig& cfg) {
  const GaussRule& rule = gauss_legendre(cfg.panel_order);
  std::priority_queue<Panel> heap;

  auto make = [&](int piece, double a, double b, double whole) {
    const auto& g = pieces[piece].g;
    const double m = 0.5 * (a + b);
    Panel p{piece, a, b, gauss(g, a, m, rule), gauss(g, m, b, rule), 0.0};
    p.error = std::abs(whole - p.value());
    return p;
  };

  double total = 0.0, total_err = 0.0;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    const auto& pc = pieces[i];
    if (!(pc.b > pc.a)) continue;
    Panel p = make(i, pc.a, pc.b, gauss(pc.g, pc.a, pc.b, rule));
    total += p.value();
    total_err += p.error;
    heap.push(p);
  }

  auto target = [&] { return std::max(cfg.tol_abs, cfg.tol_rel * std::abs(total)); };
  while (!heap.empty() && total_err > target()) {
    if (static_cast<int>(heap.size()) >= cfg.max_panels) {
      throw ConvergenceError("adaptive quadrature: panel budget exhausted", total, total_err);
    }
    Panel p = heap.top();
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b) || (p.b - p.a) <= 1e-14 * std::max(std::abs(p.a), std::abs(p.b))) {
      // Cannot bisect further in floating point; accept what we have.
      break;
    }
    heap.pop();
    Panel l = make(p.piece, p.a, m, p.left);
    Panel r = make(p.piece, m, p.b, p.right);
    total += l.value() + r.value() - p.value();
    total_err += l.error + r.error - p.error;
    heap.push(l);
    heap.push(r);
  }

  // Re-sum to shed drift from the running updates.
  QuadratureResult res;
  res.panels = static_cast<int>(heap.size());
  std::vector<Panel> leaves;
  leaves.reserve(heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(), [](const Panel& x, const Panel& y) {
    return x.piece != y.piece ? x.piece < y.piece : x.a < y.a;
  });
  for (const auto& p : leaves) {
    res.value += p.value();
    res.error += p.error;
  }
  return res;
}

QuadratureResult adaptive_panel_integrate(const ScalarFunction& f, double a, double b,
                                          const QuadratureConfig& cfg) {
  if (!(a < b)) throw DomainError("adaptive_panel_integrate: requires a < b");
  return integrate_pieces({QuadraturePiece{f, a, b}}, cfg);
}

void append_interval(std::vector<QuadraturePiece>& pieces, const ScalarFunction& f,
                     std::vector<double> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (a > 0.0 && b > 4.0 * a) {
      pieces.push_back({[f](double u) {
                          const double t = std::exp(u);
                          return f(t) * t;
                        },
                        std::log(a), std::log(b)});
    } else if (b < 0.0 && a < 4.0 * b) {
      pieces.push_back({[f](double u) {
                          const double t = std::exp(u);
                          return f(-t) * t;
                        },
                        std::log(-b), std::log(-a)});
    } else {
      pieces.push_back({f, a, b});
    }
  }
}

void append_upper_tail(std::vector<QuadraturePiece>& pieces, const ScalarFunction& f,
                       double a, double decay) {
  if (!(a > 0.0) || !(decay > 1.0))
    throw DomainError("append_upper_tail: requires a > 0 and decay > 1");
  const double q = 1.0 / (decay - 1.0);
  pieces.push_back({[f, a, q](double w) {
                      const double t = a * std::pow(w, -q);
                      return f(t) * t * q / w;
                    },
                    0.0, 1.0});
}

void append_lower_tail(std::vector<QuadraturePiece>& pieces, const ScalarFunction& f,
                       double b, double decay) {
  append_upper_tail(pieces, [f](double t) { return f(-t); }, -b, decay);
}

QuadratureResult integrate_breaks(const ScalarFunction& f, std::vector<double> breaks,
                                  const QuadratureConfig& cfg) {
  std::vector<QuadraturePiece> pieces;
  append_interval(pieces, f, std::move(breaks));
  return integrate_pieces(pieces, cfg);
}

}  // namespace fraclayer
