#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "vbesov/index_calculus.hpp"
#include "vbesov/sparse_grid.hpp"
#include "vbesov/weighted_besov.hpp"

namespace vbesov::app {

/// Invalid or unreadable configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TestFunctionSpec {
  std::string name = "exp_l1";  // exp_l1 | gaussian | basis_element
  std::map<std::string, double> params;
  std::vector<int> j;  // basis_element only
  std::vector<int> m;
};

struct RunConfig {
  int dim = 2;
  int basis_order = 2;
  IndexNorm delta1 = IndexNorm::scaled_linf(0.0);
  IndexNorm delta2 = IndexNorm::l1(2);
  double epsilon = 0.1;
  double b_w = 1.0;
  double p = 2.0;
  double q = 2.0;
  int max_level = 2;
  double domain_radius = 4.0;
  std::optional<int> quad_resolution;  // default max_level + 6
  int level_cap = 32;
  int table_resolution = 12;
  std::optional<int> L;              // default: vanishing moments of the basis
  std::optional<double> error_radius;  // default: domain_radius
  int error_samples = 257;
  TestFunctionSpec test_function;

  int effective_quad_resolution() const;
  int effective_L() const;
  double effective_error_radius() const;
  GridParams grid_params() const;
  BesovParams besov_params() const;
};

/// Checks the ranges owned by each module; throws ConfigError.
void validate(const RunConfig& config);

nlohmann::json to_json(const RunConfig& config);
/// Throws ConfigError for missing or ill-typed fields.
RunConfig run_config_from_json(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

/// Applies a `key=value` override to the test function parameters. Keys j
/// and m take comma-separated integers; everything else a real number.
void apply_param_override(TestFunctionSpec& spec, const std::string& assignment);

}  // namespace vbesov::app
