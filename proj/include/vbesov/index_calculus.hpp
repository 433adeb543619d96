#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "json.hpp"

namespace vbesov {

/// Multi-level j = (j_1, ..., j_d) with non-negative entries.
class LevelIndex {
 public:
  LevelIndex() = default;
  explicit LevelIndex(std::vector<int> entries);
  LevelIndex(std::initializer_list<int> entries)
      : LevelIndex(std::vector<int>(entries)) {}

  /// The zero level in dimension d.
  static LevelIndex zero(std::size_t dim) {
    return LevelIndex(std::vector<int>(dim, 0));
  }

  std::size_t dim() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  int l1() const;
  int linf() const;

  /// Copy with entry i increased by one.
  LevelIndex incremented(std::size_t axis) const;

  friend auto operator<=>(const LevelIndex&, const LevelIndex&) = default;
  friend bool operator==(const LevelIndex&, const LevelIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Translation m = (m_1, ..., m_d) in Z^d.
class TranslationIndex {
 public:
  TranslationIndex() = default;
  explicit TranslationIndex(std::vector<int> entries)
      : entries_(std::move(entries)) {}
  TranslationIndex(std::initializer_list<int> entries) : entries_(entries) {}

  static TranslationIndex zero(std::size_t dim) {
    return TranslationIndex(std::vector<int>(dim, 0));
  }

  std::size_t dim() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  TranslationIndex negated() const;

  friend auto operator<=>(const TranslationIndex&,
                          const TranslationIndex&) = default;
  friend bool operator==(const TranslationIndex&,
                         const TranslationIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Smoothness norm delta on N_0^d. Three families are supported:
///   weighted l1:  delta(j) = sum_i s_i j_i
///   scaled linf:  delta(j) = s * max_i j_i
///   mix:          delta(j) = (1 - theta) first(j) + theta second(j)
/// Values are immutable; mixes share their operands.
class IndexNorm {
 public:
  struct WeightedL1 {
    std::vector<double> s;
  };
  struct ScaledLinf {
    double s;
  };
  struct Mix {
    double theta;
    std::shared_ptr<const IndexNorm> first;
    std::shared_ptr<const IndexNorm> second;
  };
  using Variant = std::variant<WeightedL1, ScaledLinf, Mix>;

  static IndexNorm weighted_l1(std::vector<double> s);
  static IndexNorm scaled_linf(double s);
  static IndexNorm mix(double theta, IndexNorm first, IndexNorm second);
  /// The identically zero functional, written as a weighted l1 norm.
  static IndexNorm zero(std::size_t dim);
  /// delta(j) = |j|_1.
  static IndexNorm l1(std::size_t dim);

  const Variant& variant() const { return variant_; }

  /// Dimension fixed by the norm, if any (scaled linf works in every d).
  std::optional<std::size_t> dim() const;

  /// Number of nested mix layers (0 for the base families).
  int mix_depth() const;

  double operator()(const LevelIndex& j) const;

 private:
  explicit IndexNorm(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// delta(j). Throws DimensionError when the norm fixes a different d.
double delta_eval(const IndexNorm& norm, const LevelIndex& j);

/// True iff delta(j) < L |j|_1 for every nonzero j with |j|_inf <= radius
/// in dimension `dim`.
bool check_smoothness_bound(const IndexNorm& norm, int L, int probe_radius,
                            std::size_t dim);

/// All j in N_0^d with |j|_inf <= radius, in lexicographic order.
std::vector<LevelIndex> levels_in_box(std::size_t dim, int radius);

/// All j in N_0^d with |j|_1 == shell and |j|_inf <= cap, lexicographic.
std::vector<LevelIndex> levels_in_shell(std::size_t dim, int shell, int cap);

nlohmann::json to_json(const IndexNorm& norm);
/// Parses {"type":"weighted_l1","s":[...]}, {"type":"scaled_linf","s":x}
/// or {"type":"mix","theta":t,"first":{...},"second":{...}}.
IndexNorm index_norm_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LevelIndex& j);
nlohmann::json to_json(const TranslationIndex& m);

}  // namespace vbesov
