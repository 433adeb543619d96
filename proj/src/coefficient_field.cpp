#include "vbesov/coefficient_field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vbesov/errors.hpp"

namespace vbesov {

void CoefficientField::check_dim(std::size_t d) {
  if (dim_ == 0) dim_ = d;
  if (d != dim_)
    throw DimensionError("coefficient of dimension " + std::to_string(d) +
                         " in a field of dimension " + std::to_string(dim_));
}

void CoefficientField::set(const LevelIndex& j, const TranslationIndex& m,
                           double lambda) {
  if (j.dim() != m.dim()) throw DimensionError("level and translation dimensions differ");
  check_dim(j.dim());
  if (!std::isfinite(lambda)) throw std::invalid_argument("coefficient must be finite");
  if (std::abs(lambda) < kPruneThreshold) {
    erase(j, m);
    return;
  }
  auto [it, inserted] = levels_[j].insert_or_assign(m, lambda);
  (void)it;
  if (inserted) ++size_;
}

void CoefficientField::erase(const LevelIndex& j, const TranslationIndex& m) {
  auto lvl = levels_.find(j);
  if (lvl == levels_.end()) return;
  if (lvl->second.erase(m) > 0) --size_;
  if (lvl->second.empty()) levels_.erase(lvl);
}

double CoefficientField::get(const LevelIndex& j, const TranslationIndex& m) const {
  auto lvl = levels_.find(j);
  if (lvl == levels_.end()) return 0.0;
  auto it = lvl->second.find(m);
  return it == lvl->second.end() ? 0.0 : it->second;
}

bool CoefficientField::contains(const LevelIndex& j, const TranslationIndex& m) const {
  auto lvl = levels_.find(j);
  return lvl != levels_.end() && lvl->second.contains(m);
}

nlohmann::json to_json(const CoefficientField& field) {
  auto out = nlohmann::json::array();
  field.for_each([&](const LevelIndex& j, const TranslationIndex& m, double lambda) {
    out.push_back({{"j", to_json(j)}, {"m", to_json(m)}, {"lambda", lambda}});
  });
  return out;
}

CoefficientField coefficient_field_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficient file must hold a JSON array");
  CoefficientField field;
  for (const auto& rec : j) {
    try {
      LevelIndex level(rec.at("j").get<std::vector<int>>());
      TranslationIndex m(rec.at("m").get<std::vector<int>>());
      field.set(level, m, rec.at("lambda").get<double>());
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed coefficient record: ") + e.what());
    }
  }
  return field;
}

}  // namespace vbesov
