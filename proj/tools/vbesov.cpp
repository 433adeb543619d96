// vbesov: sparse wavelet grids and weighted Besov quasinorms.
//
//   vbesov grid   --config cfg.json [--out centers.csv] [--grid-json grid.json]
//   vbesov approx --config cfg.json [--function NAME] [--param a=1.5] [--out report.json]
//   vbesov norm   --coeffs c.json --p 2 --q 2 --delta '{"type":"scaled_linf","s":1}' [--b-w 0]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.
// VBESOV_WORKERS caps the number of worker threads.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "vbesov/app/commands.hpp"
#include "vbesov/errors.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kNumericExit = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vbesov::app::ConfigError("cannot write " + path);
  out << text;
}

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return vbesov::kInfinity;
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw vbesov::app::ConfigError("cannot parse exponent \"" + s + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse wavelet grids for exponentially weighted Besov spaces"};
  app.require_subcommand(1);

  std::string config_path, out_path, grid_json_path, function_name;
  std::vector<std::string> param_overrides;

  auto* grid = app.add_subcommand("grid", "write wavelet centers (CSV) and the grid (JSON)");
  grid->add_option("--config", config_path, "run configuration (JSON)")->required();
  grid->add_option("--out", out_path, "centers CSV path (default: stdout)");
  grid->add_option("--grid-json", grid_json_path,
                   "grid JSON path (default: <out>.grid.json when --out is given)");

  auto* approx = app.add_subcommand("approx", "approximate a test function on the grid");
  approx->add_option("--config", config_path, "run configuration (JSON)")->required();
  approx->add_option("--out", out_path, "report JSON path (default: stdout)");
  approx->add_option("--function", function_name, "exp_l1 | gaussian | basis_element");
  approx->add_option("--param", param_overrides, "test function parameter key=value");

  std::string coeff_path, delta_json, p_text = "2", q_text = "2";
  double b_w = 0.0;
  auto* norm = app.add_subcommand("norm", "weighted Besov sequence quasinorm of coefficients");
  norm->add_option("--coeffs", coeff_path, "coefficient JSON")->required();
  norm->add_option("--p", p_text, "integrability exponent (number or inf)");
  norm->add_option("--q", q_text, "summability exponent (number or inf)");
  norm->add_option("--delta", delta_json, "index norm JSON")->required();
  norm->add_option("--b-w", b_w, "weight rate b in exp(b |x|_1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigExit;
  }

  try {
    if (*grid) {
      const auto cfg = vbesov::app::load_run_config(config_path);
      const auto artifacts = vbesov::app::run_grid(cfg);
      if (out_path.empty()) {
        std::cout << artifacts.centers_csv;
      } else {
        write_file(out_path, artifacts.centers_csv);
        if (grid_json_path.empty())
          grid_json_path = std::filesystem::path(out_path).replace_extension(".grid.json").string();
      }
      if (!grid_json_path.empty()) write_file(grid_json_path, artifacts.grid_json);
    } else if (*approx) {
      auto cfg = vbesov::app::load_run_config(config_path);
      if (!function_name.empty()) cfg.test_function.name = function_name;
      for (const auto& p : param_overrides)
        vbesov::app::apply_param_override(cfg.test_function, p);
      const auto report = vbesov::app::run_approx(cfg);
      const auto text = vbesov::app::to_json(report).dump(1) + "\n";
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    } else if (*norm) {
      nlohmann::json delta;
      try {
        delta = nlohmann::json::parse(delta_json);
      } catch (const nlohmann::json::exception& e) {
        throw vbesov::app::ConfigError(std::string("--delta is not valid JSON: ") + e.what());
      }
      double value = 0.0;
      try {
        value = vbesov::app::run_norm(coeff_path, parse_exponent(p_text), parse_exponent(q_text),
                                      vbesov::index_norm_from_json(delta), b_w);
      } catch (const std::invalid_argument& e) {
        throw vbesov::app::ConfigError(e.what());
      }
      std::cout << vbesov::app::format_norm(value) << '\n';
    }
  } catch (const vbesov::app::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigExit;
  } catch (const vbesov::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
