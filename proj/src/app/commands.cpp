#include "vbesov/app/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vbesov/analysis.hpp"
#include "vbesov/app/test_functions.hpp"
#include "vbesov/weighted_besov.hpp"

namespace vbesov::app {

GridArtifacts run_grid(const RunConfig& config) {
  validate(config);
  GridArtifacts out;
  out.grid = build_grid(config.grid_params(), config.level_cap);
  const WaveletBasis basis = build_basis(config.basis_order);
  std::ostringstream csv;
  write_centers_csv(csv, grid_centers(out.grid, basis), out.grid.params.dim);
  out.centers_csv = csv.str();
  out.grid_json = to_json(out.grid).dump() + "\n";
  return out;
}

ApproxReport run_approx(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const auto dim = static_cast<std::size_t>(config.dim);

  ApproxReport report;
  const DyadicTable table = tabulate(build_basis(config.basis_order), config.table_resolution);
  const GridParams grid_params = config.grid_params();
  const SparseGrid grid = build_grid(grid_params, config.level_cap);
  report.total_points = grid.total_points;
  report.levels_retained = grid.levels.size();
  for (const auto& [j, members] : grid.levels)
    if (j.linf() > config.max_level) ++report.grid_levels_above_max_level;
  if (report.grid_levels_above_max_level > 0)
    report.warnings.push_back(std::to_string(report.grid_levels_above_max_level) +
                              " grid levels lie above max_level and are not analyzed");

  const Function f = make_test_function(config.test_function, dim, table);
  AnalysisOptions opts;
  opts.max_level = config.max_level;
  opts.domain_radius = config.domain_radius;
  opts.quad_resolution = config.effective_quad_resolution();
  const CoefficientField full = analyze(f, dim, table, opts);
  const CoefficientField kept = truncate(full, grid);
  report.coefficients_full = full.size();
  report.coefficients_truncated = kept.size();

  const BesovParams besov = config.besov_params();
  for (auto& w : validate(besov, dim)) report.warnings.push_back(std::move(w));
  report.quasinorm_full = sequence_quasinorm(full, besov);
  report.quasinorm_truncated = sequence_quasinorm(kept, besov);
  report.a_priori_bound = error_bound(grid_params, grid, config.p);
  report.bound_times_quasinorm = report.a_priori_bound * report.quasinorm_full;

  const Synthesizer approx(kept, table);
  report.measured_lpw_error =
      lpw_error(f, [&approx](std::span<const double> x) { return approx(x); }, dim, config.p,
                ExponentialWeight(config.b_w), config.effective_error_radius(),
                config.error_samples);

  report.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const ApproxReport& r) {
  return {{"grid", {{"total_points", r.total_points},
                    {"levels_retained", r.levels_retained},
                    {"levels_above_max_level", r.grid_levels_above_max_level}}},
          {"coefficients", {{"full", r.coefficients_full}, {"truncated", r.coefficients_truncated}}},
          {"a_priori_bound", r.a_priori_bound},
          {"quasinorm_full", r.quasinorm_full},
          {"quasinorm_truncated", r.quasinorm_truncated},
          {"bound_times_quasinorm", r.bound_times_quasinorm},
          {"measured_lpw_error", r.measured_lpw_error},
          {"warnings", r.warnings},
          {"timing_seconds", r.timing_seconds}};
}

double run_norm(const std::string& coeff_path, double p, double q, const IndexNorm& delta,
                double b_w) {
  std::ifstream in(coeff_path);
  if (!in) throw ConfigError("cannot open coefficient file " + coeff_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("coefficient file " + coeff_path + " is not valid JSON: " + e.what());
  }
  CoefficientField coeffs;
  try {
    coeffs = coefficient_field_from_json(j);
    BesovParams params;
    params.p = p;
    params.q = q;
    params.delta = delta;
    params.weight = ExponentialWeight(b_w);
    return sequence_quasinorm(coeffs, params);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::string format_norm(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace vbesov::app
