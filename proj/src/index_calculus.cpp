#include "vbesov/index_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vbesov/errors.hpp"

namespace vbesov {

LevelIndex::LevelIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("level index entries must be >= 0");
  }
}

int LevelIndex::l1() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int LevelIndex::linf() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

LevelIndex LevelIndex::incremented(std::size_t axis) const {
  auto e = entries_;
  ++e.at(axis);
  return LevelIndex(std::move(e));
}

TranslationIndex TranslationIndex::negated() const {
  auto e = entries_;
  for (auto& v : e) v = -v;
  return TranslationIndex(std::move(e));
}

IndexNorm IndexNorm::weighted_l1(std::vector<double> s) {
  if (s.empty()) throw std::invalid_argument("weighted_l1 needs at least one weight");
  for (double v : s) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("weighted_l1 weights must be finite and >= 0");
  }
  return IndexNorm(WeightedL1{std::move(s)});
}

IndexNorm IndexNorm::scaled_linf(double s) {
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("scaled_linf factor must be finite and >= 0");
  return IndexNorm(ScaledLinf{s});
}

IndexNorm IndexNorm::mix(double theta, IndexNorm first, IndexNorm second) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("mix theta must lie in (0, 1)");
  auto d1 = first.dim();
  auto d2 = second.dim();
  if (d1 && d2 && *d1 != *d2)
    throw DimensionError("mix operands have different dimensions");
  return IndexNorm(Mix{theta, std::make_shared<const IndexNorm>(std::move(first)),
                       std::make_shared<const IndexNorm>(std::move(second))});
}

IndexNorm IndexNorm::zero(std::size_t dim) {
  return weighted_l1(std::vector<double>(dim, 0.0));
}

IndexNorm IndexNorm::l1(std::size_t dim) {
  return weighted_l1(std::vector<double>(dim, 1.0));
}

std::optional<std::size_t> IndexNorm::dim() const {
  if (auto* w = std::get_if<WeightedL1>(&variant_)) return w->s.size();
  if (auto* m = std::get_if<Mix>(&variant_)) {
    auto d = m->first->dim();
    return d ? d : m->second->dim();
  }
  return std::nullopt;
}

int IndexNorm::mix_depth() const {
  if (auto* m = std::get_if<Mix>(&variant_))
    return 1 + std::max(m->first->mix_depth(), m->second->mix_depth());
  return 0;
}

double IndexNorm::operator()(const LevelIndex& j) const {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, WeightedL1>) {
          if (v.s.size() != j.dim())
            throw DimensionError("weighted_l1 of dimension " +
                                 std::to_string(v.s.size()) +
                                 " applied to level of dimension " +
                                 std::to_string(j.dim()));
          double acc = 0.0;
          for (std::size_t i = 0; i < j.dim(); ++i) acc += v.s[i] * j[i];
          return acc;
        } else if constexpr (std::is_same_v<T, ScaledLinf>) {
          return v.s * j.linf();
        } else {
          return (1.0 - v.theta) * (*v.first)(j) + v.theta * (*v.second)(j);
        }
      },
      variant_);
}

double delta_eval(const IndexNorm& norm, const LevelIndex& j) { return norm(j); }

namespace {

void enumerate_box(std::size_t dim, int radius, std::vector<int>& cur,
                   std::vector<LevelIndex>& out) {
  if (cur.size() == dim) {
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= radius; ++v) {
    cur.push_back(v);
    enumerate_box(dim, radius, cur, out);
    cur.pop_back();
  }
}

void enumerate_shell(std::size_t dim, int remaining, int cap,
                     std::vector<int>& cur, std::vector<LevelIndex>& out) {
  if (cur.size() + 1 == dim) {
    if (remaining <= cap) {
      cur.push_back(remaining);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = 0; v <= std::min(remaining, cap); ++v) {
    cur.push_back(v);
    enumerate_shell(dim, remaining - v, cap, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LevelIndex> levels_in_box(std::size_t dim, int radius) {
  std::vector<LevelIndex> out;
  std::vector<int> cur;
  if (dim == 0 || radius < 0) return out;
  enumerate_box(dim, radius, cur, out);
  return out;
}

std::vector<LevelIndex> levels_in_shell(std::size_t dim, int shell, int cap) {
  std::vector<LevelIndex> out;
  std::vector<int> cur;
  if (dim == 0 || shell < 0 || cap < 0) return out;
  enumerate_shell(dim, shell, cap, cur, out);
  return out;
}

bool check_smoothness_bound(const IndexNorm& norm, int L, int probe_radius,
                            std::size_t dim) {
  if (probe_radius < 1) throw std::invalid_argument("probe_radius must be >= 1");
  for (const auto& j : levels_in_box(dim, probe_radius)) {
    const int n1 = j.l1();
    if (n1 == 0) continue;
    if (!(norm(j) < static_cast<double>(L) * n1)) return false;
  }
  return true;
}

nlohmann::json to_json(const IndexNorm& norm) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IndexNorm::WeightedL1>) {
          return {{"type", "weighted_l1"}, {"s", v.s}};
        } else if constexpr (std::is_same_v<T, IndexNorm::ScaledLinf>) {
          return {{"type", "scaled_linf"}, {"s", v.s}};
        } else {
          return {{"type", "mix"},
                  {"theta", v.theta},
                  {"first", to_json(*v.first)},
                  {"second", to_json(*v.second)}};
        }
      },
      norm.variant());
}

IndexNorm index_norm_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw std::invalid_argument("index norm must be an object with a string \"type\"");
  const auto type = j.at("type").get<std::string>();
  try {
    if (type == "weighted_l1") return IndexNorm::weighted_l1(j.at("s").get<std::vector<double>>());
    if (type == "scaled_linf") return IndexNorm::scaled_linf(j.at("s").get<double>());
    if (type == "mix")
      return IndexNorm::mix(j.at("theta").get<double>(),
                            index_norm_from_json(j.at("first")),
                            index_norm_from_json(j.at("second")));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed index norm \"" + type + "\": " + e.what());
  }
  throw std::invalid_argument("unknown index norm type \"" + type + "\"");
}

nlohmann::json to_json(const LevelIndex& j) {
  return std::vector<int>(j.entries().begin(), j.entries().end());
}

nlohmann::json to_json(const TranslationIndex& m) {
  return std::vector<int>(m.entries().begin(), m.entries().end());
}

}  // namespace vbesov
