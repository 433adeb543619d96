#include "vbesov/app/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vbesov/wavelet.hpp"

namespace vbesov::app {

namespace {

double exponent_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInfinity;
    throw ConfigError("exponent must be a number or \"inf\", got \"" + s + "\"");
  }
  return j.get<double>();
}

nlohmann::json exponent_to_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

template <typename T>
void read_optional(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

int RunConfig::effective_quad_resolution() const {
  return quad_resolution.value_or(max_level + 6);
}

int RunConfig::effective_L() const { return L.value_or(basis_order); }

double RunConfig::effective_error_radius() const {
  return error_radius.value_or(domain_radius);
}

GridParams RunConfig::grid_params() const {
  GridParams g;
  g.dim = static_cast<std::size_t>(dim);
  g.delta1 = delta1;
  g.delta2 = delta2;
  g.b_w = b_w;
  g.epsilon = epsilon;
  return g;
}

BesovParams RunConfig::besov_params() const {
  BesovParams bp;
  bp.p = p;
  bp.q = q;
  bp.delta = delta2;
  bp.weight = ExponentialWeight(b_w);
  bp.L = effective_L();
  return bp;
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (c.dim < 1 || c.dim > 8) fail("dim must be in [1, 8]");
  if (c.basis_order < kMinFamilyOrder || c.basis_order > kMaxFamilyOrder)
    fail("basis_order must be in [2, 10]");
  if (c.delta1.mix_depth() > 1 || c.delta2.mix_depth() > 1)
    fail("mix norms may nest only one level deep in a config");
  if (!(c.p >= 1.0)) fail("p must be >= 1");
  if (!(c.q >= 1.0)) fail("q must be >= 1");
  if (c.max_level < 0) fail("max_level must be >= 0");
  if (!(c.domain_radius > 0.0)) fail("domain_radius must be > 0");
  if (c.level_cap < 0) fail("level_cap must be >= 0");
  if (c.table_resolution < 1 || c.table_resolution > 24) fail("table_resolution must be in [1, 24]");
  if (c.L && *c.L < 1) fail("L must be >= 1");
  if (c.error_radius && !(*c.error_radius > 0.0)) fail("error_radius must be > 0");
  if (c.error_samples < 8) fail("error_samples must be >= 8");
  try {
    vbesov::validate(c.grid_params());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const auto& tf = c.test_function;
  if (tf.name == "basis_element") {
    if (tf.j.size() != static_cast<std::size_t>(c.dim) ||
        tf.m.size() != static_cast<std::size_t>(c.dim))
      fail("basis_element needs j and m of length dim");
    for (int v : tf.j)
      if (v < 0) fail("basis_element level entries must be >= 0");
  } else if (tf.name != "exp_l1" && tf.name != "gaussian") {
    fail("unknown test function \"" + tf.name + "\" (exp_l1, gaussian, basis_element)");
  }
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json tf = {{"name", c.test_function.name}, {"params", c.test_function.params}};
  if (!c.test_function.j.empty()) tf["j"] = c.test_function.j;
  if (!c.test_function.m.empty()) tf["m"] = c.test_function.m;
  nlohmann::json out = {{"dim", c.dim},
                        {"basis_order", c.basis_order},
                        {"delta1", to_json(c.delta1)},
                        {"delta2", to_json(c.delta2)},
                        {"epsilon", c.epsilon},
                        {"b_w", c.b_w},
                        {"p", exponent_to_json(c.p)},
                        {"q", exponent_to_json(c.q)},
                        {"max_level", c.max_level},
                        {"domain_radius", c.domain_radius},
                        {"level_cap", c.level_cap},
                        {"table_resolution", c.table_resolution},
                        {"error_samples", c.error_samples},
                        {"test_function", tf}};
  if (c.quad_resolution) out["quad_resolution"] = *c.quad_resolution;
  if (c.L) out["L"] = *c.L;
  if (c.error_radius) out["error_radius"] = *c.error_radius;
  return out;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  try {
    c.dim = j.at("dim").get<int>();
    read_optional(j, "basis_order", c.basis_order);
    c.delta1 = j.contains("delta1") ? index_norm_from_json(j.at("delta1"))
                                    : IndexNorm::zero(static_cast<std::size_t>(std::max(c.dim, 1)));
    c.delta2 = index_norm_from_json(j.at("delta2"));
    c.epsilon = j.at("epsilon").get<double>();
    c.b_w = j.at("b_w").get<double>();
    if (j.contains("p")) c.p = exponent_from_json(j.at("p"));
    if (j.contains("q")) c.q = exponent_from_json(j.at("q"));
    read_optional(j, "max_level", c.max_level);
    read_optional(j, "domain_radius", c.domain_radius);
    if (j.contains("quad_resolution")) c.quad_resolution = j.at("quad_resolution").get<int>();
    read_optional(j, "level_cap", c.level_cap);
    read_optional(j, "table_resolution", c.table_resolution);
    if (j.contains("L")) c.L = j.at("L").get<int>();
    if (j.contains("error_radius")) c.error_radius = j.at("error_radius").get<double>();
    read_optional(j, "error_samples", c.error_samples);
    if (j.contains("test_function")) {
      const auto& tf = j.at("test_function");
      c.test_function.name = tf.at("name").get<std::string>();
      if (tf.contains("params"))
        c.test_function.params = tf.at("params").get<std::map<std::string, double>>();
      read_optional(tf, "j", c.test_function.j);
      read_optional(tf, "m", c.test_function.m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return run_config_from_json(j);
}

void apply_param_override(TestFunctionSpec& spec, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--param expects key=value, got \"" + assignment + "\"");
  const auto key = assignment.substr(0, eq);
  const auto value = assignment.substr(eq + 1);
  try {
    if (key == "j" || key == "m") {
      std::vector<int> entries;
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) entries.push_back(std::stoi(item));
      (key == "j" ? spec.j : spec.m) = std::move(entries);
    } else {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      spec.params[key] = v;
    }
  } catch (const std::logic_error&) {
    throw ConfigError("--param " + key + ": cannot parse \"" + value + "\"");
  }
}

}  // namespace vbesov::app
