#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "vbesov/app/run_config.hpp"
#include "vbesov/sparse_grid.hpp"

namespace vbesov::app {

struct GridArtifacts {
  SparseGrid grid;
  std::string centers_csv;
  std::string grid_json;
};

/// Builds the grid of a config and renders its centers CSV and grid JSON.
/// Output bytes depend only on the config.
GridArtifacts run_grid(const RunConfig& config);

struct ApproxReport {
  std::size_t total_points = 0;
  std::size_t levels_retained = 0;
  std::size_t grid_levels_above_max_level = 0;
  std::size_t coefficients_full = 0;
  std::size_t coefficients_truncated = 0;
  double a_priori_bound = 0.0;
  double quasinorm_full = 0.0;
  double quasinorm_truncated = 0.0;
  double bound_times_quasinorm = 0.0;
  double measured_lpw_error = 0.0;
  std::vector<std::string> warnings;
  double timing_seconds = 0.0;
};

/// analyze -> build_grid -> truncate -> reconstruct -> lpw_error.
/// Quasinorms use (p, q, delta2, w = exp(b_w |x|_1)).
ApproxReport run_approx(const RunConfig& config);

nlohmann::json to_json(const ApproxReport& report);

/// Sequence quasinorm of a coefficient file (JSON array of {j, m, lambda}).
double run_norm(const std::string& coeff_path, double p, double q,
                const IndexNorm& delta, double b_w);

/// %.12g
std::string format_norm(double value);

}  // namespace vbesov::app
