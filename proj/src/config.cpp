#include "fraclayer/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace fraclayer {

namespace {

using nlohmann::json;

// Reads the keys of one JSON object and rejects whatever was not read.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(where() + " must be an object");
  }

  template <typename T>
  void get(const std::string& key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(where() + "." + key + " has the wrong type");
    }
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  ObjectReader sub(const std::string& key) {
    seen_.insert(key);
    return ObjectReader(j_.at(key), path_.empty() ? key : path_ + "." + key);
  }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) throw ConfigError("unknown key " + (path_.empty() ? it.key() : path_ + "." + it.key()));
  }

 private:
  std::string where() const { return path_.empty() ? "config" : path_; }
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void read_grid(ObjectReader& parent, const std::string& key, UniformGrid& g) {
  if (!parent.has(key)) return;
  auto r = parent.sub(key);
  r.get("min", g.min);
  r.get("max", g.max);
  r.get("count", g.count);
  r.finish();
}

json grid_json(const UniformGrid& g) { return {{"min", g.min}, {"max", g.max}, {"count", g.count}}; }

}  // namespace

std::vector<double> UniformGrid::points() const {
  std::vector<double> out;
  if (count == 1) return {min};
  for (int i = 0; i < count; ++i) out.push_back(min + (max - min) * i / (count - 1));
  return out;
}

void RunConfig::validate() const {
  try {
    layer.validate();
    quadrature.validate();
    potential.validate();
    sampling.validate();
    counterexample.params.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  for (const auto* g : {&layer_grid, &fraclap_grid, &extension.x})
    if (g->count < 1 || !(g->max >= g->min)) throw ConfigError("grid: need count >= 1 and max >= min");
  if (extension.profile != "arctan" && extension.profile != "layer")
    throw ConfigError("extension.profile must be \"arctan\" or \"layer\"");
  for (double y : extension.y)
    if (!(y > 0.0)) throw ConfigError("extension.y values must be positive");
  if (extension.hamiltonian_samples < 0) throw ConfigError("extension.hamiltonian_samples must be >= 0");
  if (!(extension.trace_y > 0.0)) throw ConfigError("extension.trace_y must be positive");
  if (counterexample.n_min_exp < 0 || counterexample.n_max_exp > 15 ||
      counterexample.n_min_exp > counterexample.n_max_exp)
    throw ConfigError("counterexample: need 0 <= n_min_exp <= n_max_exp <= 15");
  for (const auto& [k, v] : tolerances)
    if (!(v > 0.0)) throw ConfigError("tolerance " + k + " must be positive");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

RunConfig parse_config(const json& j) {
  RunConfig c;
  ObjectReader root(j, "");
  if (root.has("layer")) {
    auto r = root.sub("layer");
    r.get("s", c.layer.s);
    r.get("alpha", c.layer.alpha);
    r.get("beta", c.layer.beta);
    r.get("kappa", c.layer.kappa);
    r.get("c1", c.layer.c1);
    r.get("c2", c.layer.c2);
    r.finish();
  }
  if (root.has("quadrature")) {
    auto r = root.sub("quadrature");
    auto& q = c.quadrature;
    r.get("tol_abs", q.tol_abs);
    r.get("tol_rel", q.tol_rel);
    r.get("panel_order", q.panel_order);
    r.get("max_panels", q.max_panels);
    std::string policy = "adaptive";
    r.get("inner_policy", policy);
    if (policy == "adaptive")
      q.inner_policy = InnerCutoffPolicy::adaptive;
    else if (policy == "fixed")
      q.inner_policy = InnerCutoffPolicy::fixed;
    else
      throw ConfigError("quadrature.inner_policy must be \"adaptive\" or \"fixed\"");
    r.get("fixed_inner_cutoff", q.fixed_inner_cutoff);
    r.get("outer_margin", q.outer_margin);
    r.finish();
  }
  if (root.has("grids")) {
    auto g = root.sub("grids");
    read_grid(g, "layer", c.layer_grid);
    read_grid(g, "fraclap", c.fraclap_grid);
    if (g.has("potential")) {
      auto r = g.sub("potential");
      r.get("x_far", c.potential.x_far);
      r.get("nodes", c.potential.nodes);
      r.get("truncation_tol", c.potential.truncation_tol);
      r.finish();
    }
    if (g.has("sampling")) {
      auto r = g.sub("sampling");
      r.get("x0", c.sampling.x0);
      r.get("samples", c.sampling.samples);
      r.finish();
    }
    if (g.has("extension")) {
      auto r = g.sub("extension");
      r.get("profile", c.extension.profile);
      read_grid(r, "x", c.extension.x);
      r.get("y", c.extension.y);
      r.get("hamiltonian_samples", c.extension.hamiltonian_samples);
      r.get("trace_y", c.extension.trace_y);
      r.finish();
    }
    if (g.has("counterexample")) {
      auto r = g.sub("counterexample");
      r.get("alpha", c.counterexample.params.alpha);
      r.get("beta", c.counterexample.params.beta);
      r.get("n_min_exp", c.counterexample.n_min_exp);
      r.get("n_max_exp", c.counterexample.n_max_exp);
      r.finish();
    }
    g.finish();
  }
  if (root.has("tolerances")) {
    const json& t = root.raw("tolerances");
    if (!t.is_object()) throw ConfigError("tolerances must be an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (!c.tolerances.count(it.key())) throw ConfigError("unknown key tolerances." + it.key());
      if (!it.value().is_number()) throw ConfigError("tolerances." + it.key() + " must be a number");
      c.tolerances[it.key()] = it.value().get<double>();
    }
  }
  root.get("output_dir", c.output_dir);
  root.get("seed", c.seed);
  root.finish();
  c.sampling.tolerance = c.tolerances.at("limits");
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json tol = json::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  return {{"layer", to_json(c.layer)},
          {"quadrature", to_json(c.quadrature)},
          {"grids",
           {{"layer", grid_json(c.layer_grid)},
            {"fraclap", grid_json(c.fraclap_grid)},
            {"potential",
             {{"x_far", c.potential.x_far},
              {"nodes", c.potential.nodes},
              {"truncation_tol", c.potential.truncation_tol}}},
            {"sampling", {{"x0", c.sampling.x0}, {"samples", c.sampling.samples}}},
            {"extension",
             {{"profile", c.extension.profile},
              {"x", grid_json(c.extension.x)},
              {"y", c.extension.y},
              {"hamiltonian_samples", c.extension.hamiltonian_samples},
              {"trace_y", c.extension.trace_y}}},
            {"counterexample",
             {{"alpha", c.counterexample.params.alpha},
              {"beta", c.counterexample.params.beta},
              {"n_min_exp", c.counterexample.n_min_exp},
              {"n_max_exp", c.counterexample.n_max_exp}}}}},
          {"tolerances", tol},
          {"output_dir", c.output_dir},
          {"seed", c.seed}};
}

std::string config_hash(const RunConfig& c) {
  const std::string text = to_json(c).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace fraclayer
