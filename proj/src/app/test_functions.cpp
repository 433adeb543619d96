#include "vbesov/app/test_functions.hpp"

#include <cmath>

namespace vbesov::app {

namespace {

double param_or(const TestFunctionSpec& spec, const char* key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

Function make_test_function(const TestFunctionSpec& spec, std::size_t dim,
                            const DyadicTable& table) {
  if (spec.name == "exp_l1") {
    const double a = param_or(spec, "a", 1.0);
    return [a](std::span<const double> x) {
      double n1 = 0.0;
      for (double v : x) n1 += std::abs(v);
      return std::exp(-a * n1);
    };
  }
  if (spec.name == "gaussian") {
    const double a = param_or(spec, "a", 1.0);
    return [a](std::span<const double> x) {
      double n2 = 0.0;
      for (double v : x) n2 += v * v;
      return std::exp(-a * n2);
    };
  }
  if (spec.name == "basis_element") {
    if (spec.j.size() != dim || spec.m.size() != dim)
      throw ConfigError("basis_element needs j and m of length dim");
    LevelIndex j(spec.j);
    TranslationIndex m(spec.m);
    const DyadicTable* t = &table;
    return [t, j, m](std::span<const double> x) { return eval_tensor(*t, j, m, x); };
  }
  throw ConfigError("unknown test function \"" + spec.name + "\"");
}

}  // namespace vbesov::app
