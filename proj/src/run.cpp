#include "fraclayer/run.hpp"

#include "fraclayer/asymptotics.hpp"
#include "fraclayer/counterexample.hpp"
#include "fraclayer/csv.hpp"
#include "fraclayer/extension.hpp"
#include "fraclayer/fraclap.hpp"
#include "fraclayer/potential.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

namespace fraclayer {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Context {
  RunConfig cfg;
  std::string hash;
  std::string timestamp;
  fs::path out_dir;
  bool arctan = false;
  std::ostream* log = nullptr;

  json provenance() const {
    return {{"tool", tool_name}, {"version", tool_version}, {"config_hash", hash},
            {"timestamp", timestamp}, {"config", to_json(cfg)}};
  }

  void write(const std::string& name, const std::string& body) const {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());
    const fs::path path = out_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << body;
    out.close();
    if (!out) throw IoError("write failed for " + path.string());
    *log << "wrote " << path.string() << '\n';
  }

  void write_csv(const std::string& name, const std::string& rows) const {
    std::string header = std::string("# ") + tool_name + " " + tool_version + " config_hash=" + hash + '\n';
    header += "# generated " + timestamp + '\n';
    write(name, header + rows);
  }

  void write_json(const std::string& name, json j) const {
    j["provenance"] = provenance();
    write(name, j.dump(2) + '\n');
  }
};

std::string fmt(double v) { return format_double(v); }

int cmd_layer(const Context& c) {
  const Layer layer(c.cfg.layer);
  std::string rows = csv_row({"x", "phi", "phi_prime", "phi_second"});
  for (double x : c.cfg.layer_grid.points()) {
    const auto d = layer.derivatives(x, 2);
    rows += csv_row({fmt(x), fmt(d[0]), fmt(d[1]), fmt(d[2])});
  }
  c.write_csv("layer.csv", rows);
  return exit_ok;
}

int cmd_fraclap(const Context& c) {
  const auto& q = c.cfg.quadrature;
  std::vector<std::string> head{"x", "value", "error_estimate", "inner", "mid", "outer_constant", "outer_power"};
  if (c.arctan) head.push_back("exact");
  std::string rows = csv_row(head);
  auto emit = [&](double x, const FracEval& e, std::optional<double> exact) {
    std::vector<std::string> f{fmt(x), fmt(e.value), fmt(e.error_estimate), fmt(e.breakdown.inner),
                               fmt(e.breakdown.mid), fmt(e.breakdown.outer_constant),
                               fmt(e.breakdown.outer_power)};
    if (exact) f.push_back(fmt(*exact));
    rows += csv_row(f);
  };
  if (c.arctan) {
    const ArctanLayer u = arctan_layer();
    for (double x : c.cfg.fraclap_grid.points()) emit(x, fraclap(u, x, q), u.fraclap_exact(x));
    c.write_csv("fraclap_arctan.csv", rows);
  } else {
    const Layer layer(c.cfg.layer);
    for (double x : c.cfg.fraclap_grid.points()) emit(x, fraclap(layer, x, q), std::nullopt);
    c.write_csv("fraclap.csv", rows);
  }
  return exit_ok;
}

int cmd_potential(const Context& c) {
  const Layer layer(c.cfg.layer);
  const PotentialModel m = build_potential(layer, c.cfg.potential, c.cfg.quadrature);
  std::string rows = csv_row({"r", "V", "Vprime"});
  for (std::size_t i = 0; i < m.r_grid.size(); ++i)
    rows += csv_row({fmt(m.r_grid[i]), fmt(m.v_values[i]), fmt(m.vprime_values[i])});
  c.write_csv("potential.csv", rows);
  c.write_json("potential.json", {{"x_far", m.x_far},
                                  {"nodes", c.cfg.potential.nodes},
                                  {"truncation_bound", m.truncation_bound},
                                  {"truncation_warning", m.truncation_warning},
                                  {"left_tail", m.left_tail},
                                  {"right_tail", m.right_tail},
                                  {"v_right", m.v_right()},
                                  {"v_max", m.v_max()},
                                  {"layer", to_json(m.params)},
                                  {"quadrature", to_json(m.quadrature)},
                                  {"notes", m.notes}});
  return exit_ok;
}

bool cmd_verify(const Context& c) {
  const Layer layer(c.cfg.layer);
  const VerificationReport rep = verify_all(layer, c.cfg.quadrature, c.cfg.potential, c.cfg.sampling);
  c.write_json("verify.json", to_json(rep));
  c.write_csv("verify.csv", to_csv(rep));
  for (const auto& r : rep.limits)
    if (!r.pass) *c.log << "check failed: " << r.name << '\n';
  for (const auto& s : rep.scalars)
    if (!s.pass) *c.log << "check failed: " << s.name << '\n';
  return rep.all_pass();
}

bool cmd_extension(const Context& c) {
  const auto& q = c.cfg.quadrature;
  const auto& eg = c.cfg.extension;
  const bool arctan = eg.profile == "arctan";
  const ArctanLayer u = arctan_layer();
  std::optional<Layer> layer;
  BoundaryData v;
  double s = 0.5;
  std::function<double(double)> G;
  std::optional<PotentialModel> model;
  if (arctan) {
    v = boundary_data(u);
    G = [u](double r) { return u.potential(r); };
  } else {
    layer.emplace(c.cfg.layer);
    v = boundary_data(*layer, q);
    s = layer->s();
    model.emplace(build_potential(*layer, c.cfg.potential, q));
    const PotentialModel* m = &*model;
    G = [m](double r) { return m->value(r); };
  }
  const ExtensionConstants k = extension_constants(s);

  std::string rows = csv_row({"x", "y", "u_bar", "w_fd", "w_repr"});
  double cross = 0.0;
  for (double x : eg.x.points())
    for (double y : eg.y) {
      const ExtensionSample e = extension_sample(v, s, x, y, q);
      cross = std::max(cross, std::abs(e.w_fd - e.w_repr));
      rows += csv_row({fmt(e.x), fmt(e.y), fmt(e.u_bar), fmt(e.w_fd), fmt(e.w_repr)});
    }
  c.write_csv("extension.csv", rows);

  double trace = 0.0;
  for (double x : eg.x.points())
    trace = std::max(trace, std::abs(w_eval(v, s, x, eg.trace_y, q, WMethod::representation) -
                                     2.0 * s * k.p_s * v.lsv(x)));

  std::mt19937_64 rng(c.cfg.seed);
  std::uniform_real_distribution<double> ux(eg.x.min, eg.x.max), uy(0.0, 2.0);
  json ham = json::array();
  bool ham_ok = true;
  for (int i = 0; i < eg.hamiltonian_samples; ++i) {
    const double x = ux(rng), y = 2.0 - uy(rng);  // y in (0, 2]
    const HamiltonianResult h = hamiltonian_check(v, G, s, x, y, q);
    ham_ok = ham_ok && h.holds;
    json rec = {{"x", x}, {"y", y}, {"lhs", h.lhs}, {"rhs", h.rhs}, {"holds", h.holds}};
    if (arctan) {
      // The potential (cos(pi r) + 1)/pi^2, a factor pi below the one matching this operator.
      auto vu = [](double r) { return (std::cos(std::numbers::pi * r) + 1.0) / (std::numbers::pi * std::numbers::pi); };
      rec["rhs_scaled_potential"] = vu(v.v(x)) - vu(1.0);
      rec["holds_scaled_potential"] = h.lhs < rec["rhs_scaled_potential"].get<double>();
    }
    ham.push_back(rec);
  }

  const double norm = kernel_h_integral(s, q);
  const double tol_trace = c.cfg.tolerances.at("extension_trace");
  const double tol_cross = c.cfg.tolerances.at("extension_cross");
  json checks = json::array();
  checks.push_back({{"name", "kernel_normalization"}, {"paper_eq", "int H_s = 1"},
                    {"value", norm}, {"target", 1.0}, {"pass", std::abs(norm - 1.0) <= 1e-10}});
  checks.push_back({{"name", "trace_limit"}, {"paper_eq", "w(x, y) -> 2 s p_s L_s v(x) as y -> 0+"},
                    {"value", trace}, {"tolerance", tol_trace}, {"pass", trace <= tol_trace}});
  checks.push_back({{"name", "w_cross_method"},
                    {"paper_eq", "finite difference and representation formula agree"},
                    {"value", cross}, {"tolerance", tol_cross}, {"pass", cross <= tol_cross}});
  checks.push_back({{"name", "hamiltonian_inequality"},
                    {"paper_eq", "(d_s/q_s) int_0^y (t^{1-2s}/2)(u_x^2 - u_y^2) dt < G(v(x)) - G(1)"},
                    {"samples", ham}, {"pass", ham_ok}});
  bool ok = true;
  for (const auto& ch : checks) ok = ok && ch["pass"].get<bool>();
  c.write_json("extension.json",
               {{"profile", eg.profile},
                {"constants",
                 {{"s", k.s}, {"p_s", k.p_s}, {"q_s", k.q_s}, {"d_s", k.d_s},
                  {"ds_over_qs", k.ds_over_qs},
                  {"p_s_closed_form", std::isfinite(k.p_s_closed_form) ? json(k.p_s_closed_form) : json("inf")}}},
                {"checks", checks},
                {"all_pass", ok}});
  return ok;
}

bool cmd_counterexample(const Context& c) {
  const auto& cg = c.cfg.counterexample;
  std::vector<long long> ns;
  long long n = 1;
  for (int e = 0; e < cg.n_min_exp; ++e) n *= 10;
  for (int e = cg.n_min_exp; e <= cg.n_max_exp; ++e, n *= 10) ns.push_back(n);
  std::string rows = csv_row({"n", "p_n", "q_n", "f_p_n", "f_q_n", "quotient"});
  double first = 0.0, best = 0.0;
  for (long long k : ns) {
    const OscPoints pts = osc_points(cg.params, k);
    const HolderTerms h = holder_terms(cg.params, k);
    if (k == ns.front()) first = h.quotient;
    best = std::max(best, h.quotient);
    rows += csv_row({std::to_string(k), fmt(pts.p), fmt(pts.q), fmt(h.f_p), fmt(h.f_q), fmt(h.quotient)});
  }
  c.write_csv("counterexample.csv", rows);
  const double slope = ns.size() >= 2 ? holder_slope(cg.params, ns) : 0.0;
  const double tol_slope = c.cfg.tolerances.at("holder_slope");
  const double x_small = std::pow(1e-12, 1.0 / cg.params.gamma());
  const double limit_dev =
      std::abs(osc_f(cg.params, x_small) / std::pow(x_small, cg.params.alpha) - 1.0);
  json checks = json::array();
  checks.push_back({{"name", "holder_slope"}, {"paper_eq", "Hoelder quotient grows without bound"},
                    {"value", slope}, {"threshold", tol_slope}, {"pass", slope >= tol_slope}});
  checks.push_back({{"name", "holder_growth"}, {"paper_eq", "max quotient exceeds 5x the first"},
                    {"value", best / first}, {"pass", best > 5.0 * first}});
  checks.push_back({{"name", "power_limit"}, {"paper_eq", "f(x)/x^alpha -> 1 as x -> 0+"},
                    {"x", x_small}, {"value", limit_dev},
                    {"bound", 2.0 / std::abs(std::log(x_small))},
                    {"pass", limit_dev <= 2.0 / std::abs(std::log(x_small))}});
  bool ok = true;
  for (const auto& ch : checks) ok = ok && ch["pass"].get<bool>();
  c.write_json("counterexample.json", {{"alpha", cg.params.alpha}, {"beta", cg.params.beta},
                                       {"gamma", cg.params.gamma()}, {"checks", checks},
                                       {"all_pass", ok}});
  return ok;
}

}  // namespace

int run_command(const std::string& sub, const RunOptions& options, std::ostream& log) {
  Context c;
  c.log = &log;
  c.arctan = options.arctan;
  try {
    c.cfg = options.config_path ? load_config(*options.config_path) : parse_config(json::object());
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return exit_config_error;
  }
  c.hash = config_hash(c.cfg);
  c.timestamp = utc_timestamp();
  std::string dir = c.cfg.output_dir;
  if (const char* env = std::getenv(output_dir_env); env && *env) dir = env;
  if (options.output_dir) dir = *options.output_dir;
  c.out_dir = dir;

  try {
    if (sub == "layer") return cmd_layer(c);
    if (sub == "fraclap") return cmd_fraclap(c);
    if (sub == "potential") return cmd_potential(c);
    if (sub == "verify") return cmd_verify(c) ? exit_ok : exit_check_failed;
    if (sub == "extension") {
      cmd_extension(c);
      return exit_ok;
    }
    if (sub == "counterexample") {
      cmd_counterexample(c);
      return exit_ok;
    }
    if (sub == "all") {
      cmd_layer(c);
      cmd_fraclap(c);
      Context ca = c;
      ca.arctan = true;
      cmd_fraclap(ca);
      cmd_potential(c);
      bool ok = cmd_verify(c);
      ok = cmd_extension(c) && ok;
      ok = cmd_counterexample(c) && ok;
      return ok ? exit_ok : exit_check_failed;
    }
    log << "unknown subcommand " << sub << '\n';
    return exit_config_error;
  } catch (const IoError& e) {
    log << "i/o error: " << e.what() << '\n';
    return exit_io_error;
  } catch (const DomainError& e) {
    log << "invalid input: " << e.what() << '\n';
    return exit_config_error;
  } catch (const ConstructionError& e) {
    log << "layer construction failed: " << e.what() << '\n';
    return exit_config_error;
  }
}

}  // namespace fraclayer
