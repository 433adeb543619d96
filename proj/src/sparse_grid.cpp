#include "vbesov/sparse_grid.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "vbesov/errors.hpp"
#include "vbesov/parallel.hpp"

namespace vbesov {

namespace {

constexpr std::size_t kMaxGridPoints = std::size_t{1} << 26;
constexpr int kShellSafetyPerDim = 64;

// Appends every m in Z^d with b sum |m_i| 2^-j_i <= budget, one axis at a time.
void enumerate_ball(const LevelIndex& j, double b, double budget, std::size_t axis,
                    double partial, std::vector<int>& mags,
                    std::vector<std::vector<int>>& out) {
  if (axis == j.dim()) {
    // expand signs of the nonzero magnitudes
    std::vector<int> cur(mags);
    const std::size_t d = mags.size();
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < d; ++i)
      if (mags[i] != 0) nz.push_back(i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << nz.size()); ++mask) {
      for (std::size_t t = 0; t < nz.size(); ++t)
        cur[nz[t]] = (mask >> t) & 1 ? -mags[nz[t]] : mags[nz[t]];
      out.push_back(cur);
    }
    if (out.size() > kMaxGridPoints)
      throw NumericError("sparse grid exceeds " + std::to_string(kMaxGridPoints) + " points");
    return;
  }
  const double unit = std::ldexp(1.0, -j[axis]);
  for (int a = 0;; ++a) {
    const double s = partial + a * unit;
    if (!(b * s <= budget)) break;
    mags[axis] = a;
    enumerate_ball(j, b, budget, axis + 1, s, mags, out);
  }
  mags[axis] = 0;
}

std::set<TranslationIndex> level_members(const GridParams& params, const LevelIndex& j,
                                         double threshold) {
  std::vector<std::vector<int>> raw;
  std::vector<int> mags(params.dim, 0);
  enumerate_ball(j, params.b_w, threshold + kTieTolerance, 0, 0.0, mags, raw);
  std::set<TranslationIndex> out;
  for (auto& m : raw) out.emplace(std::move(m));
  return out;
}

bool retained(double threshold) { return threshold >= -kTieTolerance; }

bool gap_nondecreasing_beyond(const GridParams& params, const std::vector<LevelIndex>& shell) {
  for (const auto& j : shell) {
    const double g = level_gap(params, j);
    for (std::size_t a = 0; a < j.dim(); ++a)
      if (level_gap(params, j.incremented(a)) < g - 1e-12) return false;
  }
  return true;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void validate(const GridParams& params) {
  if (params.dim == 0) throw std::invalid_argument("grid dimension must be >= 1");
  if (!(params.b_w > 0.0) || !std::isfinite(params.b_w))
    throw std::invalid_argument("grid weight rate b_w must be > 0");
  if (!(params.epsilon > 0.0) || !std::isfinite(params.epsilon))
    throw std::invalid_argument("grid epsilon must be > 0");
  for (const auto* norm : {&params.delta1, &params.delta2}) {
    if (auto d = norm->dim(); d && *d != params.dim)
      throw DimensionError("grid norm dimension " + std::to_string(*d) +
                           " does not match grid dimension " + std::to_string(params.dim));
  }
  for (const auto& j : levels_in_box(params.dim, 4)) {
    if (params.delta2(j) < params.delta1(j) - 1e-12)
      throw std::invalid_argument("delta2 must dominate delta1 (fails at a probed level)");
  }
}

bool SparseGrid::contains(const LevelIndex& j, const TranslationIndex& m) const {
  auto it = levels.find(j);
  return it != levels.end() && it->second.contains(m);
}

double level_gap(const GridParams& params, const LevelIndex& j) {
  return params.delta2(j) - params.delta1(j);
}

double level_threshold(const GridParams& params, const LevelIndex& j) {
  return -level_gap(params, j) * std::numbers::ln2 - std::log(params.epsilon);
}

SparseGrid build_grid(const GridParams& params, int level_cap) {
  validate(params);
  if (level_cap < 0) throw std::invalid_argument("level_cap must be >= 0");
  SparseGrid grid;
  grid.params = params;
  grid.level_cap = level_cap;

  const int max_shell = static_cast<int>(params.dim) * level_cap;
  for (int shell = 0; shell <= max_shell; ++shell) {
    const auto levels = levels_in_shell(params.dim, shell, level_cap);
    std::vector<std::set<TranslationIndex>> members(levels.size());
    std::vector<char> kept(levels.size(), 0);
    parallel_for(levels.size(), [&](std::size_t i) {
      const double t = level_threshold(params, levels[i]);
      if (!retained(t)) return;
      kept[i] = 1;
      members[i] = level_members(params, levels[i], t);
    });
    bool any = false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (!kept[i]) continue;
      any = true;
      if (levels[i].linf() == level_cap)
        throw NumericError("admissible levels not exhausted at level_cap " +
                           std::to_string(level_cap) + "; raise the cap or check that "
                           "delta2 - delta1 grows");
      grid.total_points += members[i].size();
      if (grid.total_points > kMaxGridPoints)
        throw NumericError("sparse grid exceeds " + std::to_string(kMaxGridPoints) + " points");
      grid.levels.emplace(levels[i], std::move(members[i]));
    }
    if (!any && gap_nondecreasing_beyond(params, levels)) break;
  }
  return grid;
}

double error_bound(const GridParams& params, const SparseGrid& grid, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("error_bound: p must be >= 1");
  validate(params);
  double bound = 0.0;
  const int max_shell = kShellSafetyPerDim * static_cast<int>(params.dim);
  for (int shell = 0; shell <= max_shell; ++shell) {
    const auto levels = levels_in_shell(params.dim, shell, shell);
    bool any = false;
    for (const auto& j : levels) {
      const double scale = std::exp2(-level_gap(params, j));
      const double t = level_threshold(params, j);
      auto it = grid.levels.find(j);
      if (!retained(t) || it == grid.levels.end()) {
        bound = std::max(bound, scale);  // m = 0 excluded
        continue;
      }
      any = true;
      // first excluded point along each axis; the one on the finest axis
      // attains min |m / 2^j|_1 over the complement
      double r = std::numeric_limits<double>::infinity();
      std::vector<int> m(params.dim, 0);
      for (std::size_t a = 0; a < params.dim; ++a) {
        int step = 0;
        while (true) {
          m[a] = step;
          if (!it->second.contains(TranslationIndex(m))) break;
          ++step;
        }
        m[a] = 0;
        r = std::min(r, std::ldexp(static_cast<double>(step), -j[a]));
      }
      bound = std::max(bound, scale * std::exp(-params.b_w * r));
    }
    if (!any && gap_nondecreasing_beyond(params, levels)) break;
  }
  return bound;
}

CoefficientField truncate(const CoefficientField& coeffs, const SparseGrid& grid) {
  if (coeffs.dim() != 0 && coeffs.dim() != grid.params.dim)
    throw DimensionError("truncate: coefficient and grid dimensions differ");
  CoefficientField out(grid.params.dim);
  coeffs.for_each([&](const LevelIndex& j, const TranslationIndex& m, double lambda) {
    if (grid.contains(j, m)) out.set(j, m, lambda);
  });
  return out;
}

std::vector<CenterPoint> grid_centers(const SparseGrid& grid, double support_length) {
  std::vector<CenterPoint> out;
  out.reserve(grid.total_points);
  for (const auto& [j, members] : grid.levels) {
    for (const auto& m : members) {
      CenterPoint c{std::vector<double>(j.dim()), j, m};
      for (std::size_t i = 0; i < j.dim(); ++i)
        c.x[i] = std::ldexp(m[i] + 0.5 * support_length, -effective_scale(j[i]));
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const CenterPoint& a, const CenterPoint& b) {
    return std::tie(a.x, a.j, a.m) < std::tie(b.x, b.j, b.m);
  });
  return out;
}

void write_centers_csv(std::ostream& out, const std::vector<CenterPoint>& centers,
                       std::size_t dim) {
  std::string header;
  for (const char* prefix : {"x", "j", "m"})
    for (std::size_t i = 1; i <= dim; ++i)
      header += (header.empty() ? "" : ",") + std::string(prefix) + std::to_string(i);
  out << header << '\n';
  for (const auto& c : centers) {
    std::string row;
    for (std::size_t i = 0; i < dim; ++i) row += format_number(c.x[i]) + ',';
    for (std::size_t i = 0; i < dim; ++i) row += std::to_string(c.j[i]) + ',';
    for (std::size_t i = 0; i < dim; ++i)
      row += std::to_string(c.m[i]) + (i + 1 < dim ? "," : "");
    out << row << '\n';
  }
}

nlohmann::json to_json(const GridParams& params) {
  return {{"dim", params.dim},
          {"delta1", to_json(params.delta1)},
          {"delta2", to_json(params.delta2)},
          {"b_w", params.b_w},
          {"epsilon", params.epsilon}};
}

GridParams grid_params_from_json(const nlohmann::json& j) {
  try {
    GridParams p;
    p.dim = j.at("dim").get<std::size_t>();
    p.delta1 = index_norm_from_json(j.at("delta1"));
    p.delta2 = index_norm_from_json(j.at("delta2"));
    p.b_w = j.at("b_w").get<double>();
    p.epsilon = j.at("epsilon").get<double>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed grid parameters: ") + e.what());
  }
}

nlohmann::json to_json(const SparseGrid& grid) {
  auto levels = nlohmann::json::array();
  for (const auto& [j, members] : grid.levels) {
    auto ms = nlohmann::json::array();
    for (const auto& m : members) ms.push_back(to_json(m));
    levels.push_back({{"j", to_json(j)}, {"members", std::move(ms)}});
  }
  return {{"params", to_json(grid.params)},
          {"levels", std::move(levels)},
          {"total_points", grid.total_points}};
}

}  // namespace vbesov
