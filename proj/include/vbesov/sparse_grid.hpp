#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "json.hpp"
#include "vbesov/coefficient_field.hpp"
#include "vbesov/index_calculus.hpp"
#include "vbesov/wavelet.hpp"

namespace vbesov {

struct GridParams {
  std::size_t dim = 2;
  IndexNorm delta1 = IndexNorm::scaled_linf(0.0);
  IndexNorm delta2 = IndexNorm::scaled_linf(1.0);
  double b_w = 1.0;      // > 0
  double epsilon = 0.1;  // > 0
};

/// Throws std::invalid_argument unless b_w > 0, epsilon > 0, the norms fit
/// `dim`, and delta2 >= delta1 on |j|_inf <= 4.
void validate(const GridParams& params);

/// Absolute slack on the log-scale membership test. Points with
/// b |m / 2^j|_1 within this of T(j) are admitted.
inline constexpr double kTieTolerance = 1e-12;

struct SparseGrid {
  GridParams params;
  std::map<LevelIndex, std::set<TranslationIndex>> levels;  // nonempty G_j
  std::size_t total_points = 0;
  int level_cap = 0;

  bool contains(const LevelIndex& j, const TranslationIndex& m) const;
};

/// Level gap delta2(j) - delta1(j).
double level_gap(const GridParams& params, const LevelIndex& j);

/// T(j) = ln(2^{-(delta2(j) - delta1(j))} / epsilon); negative means G_j is empty.
double level_threshold(const GridParams& params, const LevelIndex& j);

/// G_j = { m : b_w sum_i |m_i| 2^{-j_i} <= T(j) } for every j with T(j) >= 0.
/// Levels are scanned in shells of constant |j|_1 with |j|_inf <= level_cap;
/// the scan stops at the first shell that is entirely empty and beyond which
/// the gap does not decrease along any axis. Throws NumericError if a level
/// with |j|_inf == level_cap is still admissible.
SparseGrid build_grid(const GridParams& params, int level_cap);

/// sup_j 2^{-(delta2(j) - delta1(j))} max_{m not in G_j} exp(-b_w |m / 2^j|_1),
/// exact: retained levels contribute their first excluded axis point, empty
/// levels contribute 2^{-gap}.
double error_bound(const GridParams& params, const SparseGrid& grid, double p);

/// Entries (j, m) with m in G_j.
CoefficientField truncate(const CoefficientField& coeffs, const SparseGrid& grid);

struct CenterPoint {
  std::vector<double> x;
  LevelIndex j;
  TranslationIndex m;
};

/// Support midpoint of psi_{j,m} for every grid point:
/// x_i = 2^{-k_i} (m_i + support_length / 2) with k_i the effective scale of
/// stored level j_i. Sorted lexicographically by (x, j, m).
std::vector<CenterPoint> grid_centers(const SparseGrid& grid, double support_length);
inline std::vector<CenterPoint> grid_centers(const SparseGrid& grid,
                                             const WaveletBasis& basis) {
  return grid_centers(grid, basis.support_length);
}

/// Header x1..xd,j1..jd,m1..md, shortest round-trip number formatting.
void write_centers_csv(std::ostream& out, const std::vector<CenterPoint>& centers,
                       std::size_t dim);

nlohmann::json to_json(const GridParams& params);
GridParams grid_params_from_json(const nlohmann::json& j);
/// {"params":{...},"levels":[{"j":[...],"members":[[...],...]}],"total_points":N}
nlohmann::json to_json(const SparseGrid& grid);

}  // namespace vbesov
