#include "fraclayer/asymptotics.hpp"

#include "fraclayer/csv.hpp"
#include "fraclayer/fraclap.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

namespace fraclayer {

namespace {

using Sampler = std::function<double(double)>;

LimitReport make_report(std::string name, std::string claim, LimitSide side,
                        const std::vector<double>& xs, const Sampler& f,
                        std::optional<double> target, double tolerance) {
  std::vector<Sample> samples;
  samples.reserve(xs.size());
  for (double x : xs) samples.push_back({x, f(x)});
  LimitReport r;
  r.name = std::move(name);
  r.paper_eq = std::move(claim);
  r.side = side;
  r.estimate = extrapolate_limit(samples, tolerance);
  r.target = target;
  r.tolerance = tolerance;
  if (target) {
    r.rel_error = std::abs(r.estimate.extrapolated - *target) / std::abs(*target);
    r.pass = std::isfinite(r.rel_error) && r.rel_error <= tolerance;
  } else {
    r.rel_error = r.estimate.error_estimate / std::max(1.0, std::abs(r.estimate.extrapolated));
    r.pass = r.estimate.converged;
  }
  return r;
}

std::vector<double> abscissae(const Layer& layer, const SamplingConfig& sampling, double sign) {
  sampling.validate();
  std::vector<double> xs;
  const double x0 = sampling.start(layer);
  for (int k = 0; k < sampling.samples; ++k) xs.push_back(sign * x0 * std::ldexp(1.0, k));
  return xs;
}

double far_fraclap(const Layer& layer, int order, double x, const QuadratureConfig& cfg) {
  return fraclap_deriv(layer, order, x, far_field_config(cfg, layer.s(), order, x)).value;
}

}  // namespace

std::string to_string(LimitSide side) {
  switch (side) {
    case LimitSide::minus_infinity: return "-inf";
    case LimitSide::plus_infinity: return "+inf";
    case LimitSide::left_well: return "-1+";
    case LimitSide::right_well: return "1-";
  }
  return "?";
}

bool VerificationReport::all_pass() const {
  return std::all_of(limits.begin(), limits.end(), [](const auto& r) { return r.pass; }) &&
         std::all_of(scalars.begin(), scalars.end(), [](const auto& c) { return c.pass; });
}

double SamplingConfig::start(const Layer& layer) const {
  return x0 > 0.0 ? x0 : 50.0 * layer.params().kappa;
}

void SamplingConfig::validate() const {
  if (samples < 4) throw DomainError("sampling: at least 4 samples are needed");
  if (!(tolerance > 0.0)) throw DomainError("sampling: tolerance must be positive");
}

std::pair<LimitReport, LimitReport> verify_fraclap_decay(const Layer& layer,
                                                         const QuadratureConfig& cfg,
                                                         const SamplingConfig& sampling) {
  const double s = layer.s();
  auto scaled = [&](double x) { return std::pow(std::abs(x), 2.0 * s) * far_fraclap(layer, 0, x, cfg); };
  const std::string claim = "|x|^{2s} L_s phi(x) -> +-1/s as x -> -+inf";
  return {make_report("fraclap_decay_minus", claim, LimitSide::minus_infinity,
                      abscissae(layer, sampling, -1.0), scaled, 1.0 / s, sampling.tolerance),
          make_report("fraclap_decay_plus", claim, LimitSide::plus_infinity,
                      abscissae(layer, sampling, 1.0), scaled, -1.0 / s, sampling.tolerance)};
}

std::pair<LimitReport, LimitReport> verify_derivative_decay(const Layer& layer, int i,
                                                            const QuadratureConfig& cfg,
                                                            const SamplingConfig& sampling) {
  if (i < 1 || i > 3) throw DomainError("verify_derivative_decay: i must lie in [1, 3]");
  const double s = layer.s();
  auto scaled = [&](double x) {
    return std::pow(std::abs(x), i + 2.0 * s) * far_fraclap(layer, i, x, cfg);
  };
  const double magnitude = 2.0 * gamma_ratio(i, s);
  const double plus_sign = (i % 2 == 1) ? 1.0 : -1.0;
  const std::string claim =
      "|x|^{i+2s} L_s phi^(i)(x) -> (-+1)^{i-1} 2 Gamma(i+2s)/Gamma(1+2s) as x -> +-inf";
  const std::string tag = "derivative_decay_i" + std::to_string(i);
  return {make_report(tag + "_minus", claim, LimitSide::minus_infinity,
                      abscissae(layer, sampling, -1.0), scaled, magnitude, sampling.tolerance),
          make_report(tag + "_plus", claim, LimitSide::plus_infinity,
                      abscissae(layer, sampling, 1.0), scaled, plus_sign * magnitude,
                      sampling.tolerance)};
}

double well_derivative_target(const LayerParams& p, int i, bool right) {
  const double e = right ? p.beta : p.alpha;
  const double c = right ? p.c2 : p.c1;
  const double a = 2.0 * p.s / e;
  double prod = 1.0;
  for (int j = 0; j < i; ++j) prod *= a - j;
  const double sign = (right && i % 2 == 0) ? -1.0 : 1.0;
  return sign * std::pow(c, -a) * prod / p.s;
}

std::vector<LimitReport> verify_potential_limits(const Layer& layer, const PotentialModel& model,
                                                 const QuadratureConfig& cfg,
                                                 const SamplingConfig& sampling) {
  const auto& p = layer.params();
  const double a = 2.0 * p.s / p.alpha, b = 2.0 * p.s / p.beta;
  const auto left = abscissae(layer, sampling, -1.0);
  const auto right = abscissae(layer, sampling, 1.0);
  // 1 + r and 1 - r straight from the tail deviations.
  auto one_plus = [&](double x) { return layer.split(x, 0).deviation; };
  auto one_minus = [&](double x) { return -layer.split(x, 0).deviation; };

  std::vector<LimitReport> out;
  out.push_back(make_report(
      "vprime_left_well", "V'(r)/(1+r)^{2s/alpha} -> C1^{-2s/alpha}/s as r -> -1+",
      LimitSide::left_well, left,
      [&](double x) { return far_fraclap(layer, 0, x, cfg) / std::pow(one_plus(x), a); },
      well_derivative_target(p, 0, false), sampling.tolerance));
  out.push_back(make_report(
      "v_left_well",
      "V(r)/(1+r)^{2s/alpha+1} -> alpha C1^{-2s/alpha}/((2s+alpha)s) as r -> -1+",
      LimitSide::left_well, left,
      [&](double x) { return potential_left_integral(layer, x, cfg) / std::pow(one_plus(x), a + 1.0); },
      p.alpha * std::pow(p.c1, -a) / ((2.0 * p.s + p.alpha) * p.s), sampling.tolerance));
  out.push_back(make_report(
      "vprime_right_well", "V'(r)/(1-r)^{2s/beta} -> -C2^{-2s/beta}/s as r -> 1-",
      LimitSide::right_well, right,
      [&](double x) { return far_fraclap(layer, 0, x, cfg) / std::pow(one_minus(x), b); },
      well_derivative_target(p, 0, true), sampling.tolerance));
  out.push_back(make_report(
      "v_right_well", "V(r)/(1-r)^{2s/beta+1} -> beta C2^{-2s/beta}/((2s+beta)s) as r -> 1-",
      LimitSide::right_well, right,
      [&](double x) {
        const double v = model.v_right() - potential_right_integral(layer, x, cfg);
        return v / std::pow(one_minus(x), b + 1.0);
      },
      p.beta * std::pow(p.c2, -b) / ((2.0 * p.s + p.beta) * p.s), sampling.tolerance));
  return out;
}

std::pair<LimitReport, LimitReport> verify_higher_limits(const Layer& layer, int i,
                                                         const QuadratureConfig& cfg,
                                                         const SamplingConfig& sampling) {
  if (i < 1 || i > 3) throw DomainError("verify_higher_limits: i must lie in [1, 3]");
  const auto& p = layer.params();
  auto is_integer = [](double v) { return std::abs(v - std::round(v)) <= 1e-12 * std::max(1.0, v); };

  auto one_side = [&](bool right) {
    const double e = right ? p.beta : p.alpha;
    const double a = 2.0 * p.s / e;
    std::optional<double> target;
    std::string claim;
    if (2.0 * p.s >= e * i || !is_integer(a)) {
      target = well_derivative_target(p, i, right);
      claim = right ? "V^(i+1)(r)/(1-r)^{2s/beta-i} -> ((-1)^{i+1}/s) C2^{-2s/beta} prod_{j<i}(2s/beta-j)"
                    : "V^(i+1)(r)/(1+r)^{2s/alpha-i} -> (1/s) C1^{-2s/alpha} prod_{j<i}(2s/alpha-j)";
    } else {
      claim = right ? "V^(i+1)(r)/(1-r)^{2s/beta-i} has a finite limit as r -> 1-"
                    : "V^(i+1)(r)/(1+r)^{2s/alpha-i} has a finite limit as r -> -1+";
    }
    const std::string name =
        std::string(right ? "higher_right_well_i" : "higher_left_well_i") + std::to_string(i);
    return make_report(
        name, claim, right ? LimitSide::right_well : LimitSide::left_well,
        abscissae(layer, sampling, right ? 1.0 : -1.0),
        [&, right, a](double x) {
          const double dev = std::abs(layer.split(x, 0).deviation);
          return recover_Vderiv(layer, x, i, cfg) / std::pow(dev, a - i);
        },
        target, sampling.tolerance);
  };
  return {one_side(false), one_side(true)};
}

std::vector<ScalarCheck> verify_double_well(const PotentialModel& model) {
  std::vector<ScalarCheck> out;
  const double vmax = model.v_max();
  {
    ScalarCheck c{"v_left_zero", "V(-1) = 0", model.v_left(), 0.0, model.v_left() == 0.0, ""};
    out.push_back(c);
  }
  {
    const double rel = std::abs(model.v_right()) / vmax;
    ScalarCheck c{"v_right_balance", "V(1) = V(-1): |V(1)| <= 1e-4 max V", model.v_right(), 0.0,
                  rel <= 1e-4, "|V(1)|/max V = " + format_double(rel)};
    out.push_back(c);
  }
  {
    double vmin = vmax;
    for (std::size_t j = 1; j + 1 < model.v_values.size(); ++j)
      vmin = std::min(vmin, model.v_values[j]);
    ScalarCheck c{"v_interior_positive", "V > 0 on (-1, 1)", vmin, std::nullopt, vmin > 0.0,
                  "minimum over interior grid"};
    out.push_back(c);
  }
  return out;
}

std::pair<int, int> regularity_class(const LayerParams& p) {
  p.validate();
  auto fl = [](double v) { return static_cast<int>(std::floor(v * (1.0 + 1e-12))); };
  return {fl(2.0 * p.s / p.alpha), fl(2.0 * p.s / p.beta)};
}

VerificationReport verify_all(const Layer& layer, const QuadratureConfig& cfg,
                              const PotentialGridConfig& grid, const SamplingConfig& sampling) {
  VerificationReport rep;
  rep.layer = layer.params();
  rep.quadrature = cfg;

  using Limits = std::vector<LimitReport>;
  auto pair_vec = [](std::pair<LimitReport, LimitReport> p) {
    return Limits{std::move(p.first), std::move(p.second)};
  };
  std::vector<std::future<Limits>> jobs;
  jobs.push_back(std::async(std::launch::async,
                            [&] { return pair_vec(verify_fraclap_decay(layer, cfg, sampling)); }));
  for (int i = 1; i <= 3; ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return pair_vec(verify_derivative_decay(layer, i, cfg, sampling));
    }));
  for (int i = 1; i <= 3; ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return pair_vec(verify_higher_limits(layer, i, cfg, sampling));
    }));
  const PotentialModel model = build_potential(layer, grid, cfg);
  jobs.push_back(std::async(std::launch::async,
                            [&] { return verify_potential_limits(layer, model, cfg, sampling); }));

  for (auto& j : jobs)
    for (auto& r : j.get()) rep.limits.push_back(std::move(r));
  std::sort(rep.limits.begin(), rep.limits.end(),
            [](const auto& x, const auto& y) { return x.name < y.name; });

  rep.scalars = verify_double_well(model);
  const auto [ra, rb] = regularity_class(rep.layer);
  rep.scalars.push_back({"regularity_class", "(floor(2s/alpha), floor(2s/beta))",
                         static_cast<double>(ra), std::nullopt, true,
                         "(" + std::to_string(ra) + ", " + std::to_string(rb) + ")"});
  if (model.truncation_warning)
    rep.scalars.push_back({"potential_truncation", "tail truncation bound below tolerance",
                           model.truncation_bound, std::nullopt, true,
                           "warning: bound exceeds grid tolerance; tails are integrated exactly"});
  return rep;
}

nlohmann::json to_json(const LayerParams& p) {
  return {{"s", p.s}, {"alpha", p.alpha}, {"beta", p.beta},
          {"kappa", p.kappa}, {"c1", p.c1}, {"c2", p.c2}};
}

nlohmann::json to_json(const QuadratureConfig& c) {
  return {{"tol_abs", c.tol_abs},
          {"tol_rel", c.tol_rel},
          {"panel_order", c.panel_order},
          {"max_panels", c.max_panels},
          {"inner_policy", c.inner_policy == InnerCutoffPolicy::adaptive ? "adaptive" : "fixed"},
          {"fixed_inner_cutoff", c.fixed_inner_cutoff},
          {"outer_margin", c.outer_margin}};
}

nlohmann::json to_json(const LimitReport& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.estimate.samples) samples.push_back({s.abscissa, s.value});
  nlohmann::json j = {{"name", r.name},
                      {"paper_eq", r.paper_eq},
                      {"side", to_string(r.side)},
                      {"samples", samples},
                      {"extrapolated", r.estimate.extrapolated},
                      {"error_estimate", r.estimate.error_estimate},
                      {"converged", r.estimate.converged},
                      {"rel_error", r.rel_error},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}};
  if (r.target)
    j["target"] = *r.target;
  else
    j["target"] = "finite";
  return j;
}

nlohmann::json to_json(const ScalarCheck& c) {
  nlohmann::json j = {{"name", c.name},   {"paper_eq", c.paper_eq}, {"value", c.value},
                      {"pass", c.pass},   {"detail", c.detail}};
  if (c.target) j["target"] = *c.target;
  return j;
}

nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : rep.limits) checks.push_back(to_json(r));
  nlohmann::json scalars = nlohmann::json::array();
  for (const auto& c : rep.scalars) scalars.push_back(to_json(c));
  return {{"layer", to_json(rep.layer)},
          {"quadrature", to_json(rep.quadrature)},
          {"checks", checks},
          {"scalar_checks", scalars},
          {"all_pass", rep.all_pass()}};
}

std::string to_csv(const VerificationReport& rep) {
  std::string out =
      csv_row({"kind", "name", "paper_eq", "side", "target", "estimate", "rel_error", "tolerance", "pass"});
  for (const auto& r : rep.limits)
    out += csv_row({"limit", r.name, r.paper_eq, to_string(r.side),
                    r.target ? format_double(*r.target) : "finite",
                    format_double(r.estimate.extrapolated), format_double(r.rel_error),
                    format_double(r.tolerance), r.pass ? "true" : "false"});
  for (const auto& c : rep.scalars)
    out += csv_row({"scalar", c.name, c.paper_eq, "", c.target ? format_double(*c.target) : "",
                    format_double(c.value), "", "", c.pass ? "true" : "false"});
  return out;
}

}  // namespace fraclayer
