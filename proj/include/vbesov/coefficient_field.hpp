#pragma once

#include <cstddef>
#include <map>

#include "json.hpp"
#include "vbesov/index_calculus.hpp"

namespace vbesov {

/// Entries with |lambda| below this are never stored.
inline constexpr double kPruneThreshold = 1e-14;

/// Sparse wavelet coefficients lambda_{j,m}, grouped by level. Iteration is
/// lexicographic in (j, m).
class CoefficientField {
 public:
  using Level = std::map<TranslationIndex, double>;
  using Levels = std::map<LevelIndex, Level>;

  /// dim 0 means "not fixed yet"; the first insertion fixes it.
  explicit CoefficientField(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Stores lambda, or erases the entry when |lambda| < kPruneThreshold.
  void set(const LevelIndex& j, const TranslationIndex& m, double lambda);
  void erase(const LevelIndex& j, const TranslationIndex& m);
  /// 0 for absent entries.
  double get(const LevelIndex& j, const TranslationIndex& m) const;
  bool contains(const LevelIndex& j, const TranslationIndex& m) const;

  const Levels& levels() const { return levels_; }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [j, row] : levels_)
      for (const auto& [m, lambda] : row) f(j, m, lambda);
  }

 private:
  void check_dim(std::size_t d);
  std::size_t dim_;
  std::size_t size_ = 0;
  Levels levels_;
};

/// [{"j":[...],"m":[...],"lambda":x}, ...] in lexicographic (j, m) order.
nlohmann::json to_json(const CoefficientField& field);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
CoefficientField coefficient_field_from_json(const nlohmann::json& j);

}  // namespace vbesov
