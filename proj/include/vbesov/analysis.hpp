#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "vbesov/coefficient_field.hpp"
#include "vbesov/wavelet.hpp"

namespace vbesov {

/// A d-variate function. Must be safe to call concurrently.
using Function = std::function<double(std::span<const double>)>;

struct AnalysisOptions {
  int max_level = 0;
  double domain_radius = 1.0;
  /// Per-axis quadrature step 2^-quad_resolution; must be >= max_level + 2.
  int quad_resolution = 6;
  /// Restrict analysis to these levels (each with |j|_inf <= max_level).
  std::optional<std::vector<LevelIndex>> only_levels;
};

/// Default step for a given max level.
inline int default_quad_resolution(int max_level) { return max_level + 6; }

/// Upper bound on the number of function samples analyze() will take.
inline constexpr std::size_t kMaxAnalysisSamples = std::size_t{1} << 27;

/// lambda_{j,m} = <f, psi_{j,m}> by the composite trapezoid rule on the
/// dyadic grid 2^-quad_resolution Z^d, for every j with |j|_inf <= max_level
/// and every m whose support meets [-R, R]^d. f is sampled once on the
/// union of those supports; each level is a sequence of banded per-axis
/// contractions. Levels run in parallel; the result does not depend on the
/// worker count.
CoefficientField analyze(const Function& f, std::size_t dim, const DyadicTable& table,
                         const AnalysisOptions& options);

/// Range of translations whose support meets [-R, R] at stored level k.
struct TranslationRange {
  long long lo;
  long long hi;
};
TranslationRange translations_meeting_box(const WaveletBasis& basis, int level,
                                          double radius);

/// sum lambda psi_{j,m}(x) over stored entries whose support contains x.
double reconstruct(const CoefficientField& coeffs, const DyadicTable& table,
                   std::span<const double> x);

/// Repeated point evaluation of a fixed expansion. Holds a reference to the
/// table, which must outlive it.
class Synthesizer {
 public:
  Synthesizer(const CoefficientField& coeffs, const DyadicTable& table);
  double operator()(std::span<const double> x) const;

 private:
  struct LevelData {
    LevelIndex level;
    std::vector<long long> lo, hi, stride;
    std::vector<double> dense;                      // whole bounding box, when small
    std::unordered_map<long long, double> sparse;  // otherwise
  };
  const DyadicTable* table_;
  std::size_t dim_;
  std::vector<LevelData> levels_;
};

}  // namespace vbesov
