#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "vbesov/analysis.hpp"
#include "vbesov/coefficient_field.hpp"
#include "vbesov/index_calculus.hpp"

namespace vbesov {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// w(x) = exp(b |x|_1). Satisfies w(x) <= w(x - y) exp(c_w |y|_1) with c_w = b.
class ExponentialWeight {
 public:
  explicit ExponentialWeight(double rate = 0.0);
  double rate() const { return rate_; }
  double growth_constant() const { return rate_; }
  double operator()(std::span<const double> x) const;

 private:
  double rate_;
};

/// Q_{j,m} = prod_i [2^-j_i m_i, 2^-j_i (m_i + 1)).
struct DyadicBox {
  LevelIndex level;
  TranslationIndex translation;

  DyadicBox(LevelIndex j, TranslationIndex m);
  double lower(std::size_t axis) const;
  double upper(std::size_t axis) const;
  /// 2^-|j|_1
  double volume() const;
};

/// int_a^b exp(rate |x|) dx in closed form (split at 0 if needed).
double interval_weight(double rate, double a, double b);

/// w(Q) = int_Q w(x) dx, product of closed-form 1D integrals.
double weight_measure(const ExponentialWeight& weight, const DyadicBox& box);

struct BesovParams {
  double p = 2.0;  // in [1, inf]
  double q = 2.0;  // in [1, inf]
  IndexNorm delta = IndexNorm::scaled_linf(0.0);
  ExponentialWeight weight{};
  int L = 1;
};

/// Throws std::invalid_argument for p, q < 1, L < 1, or delta(j) >= L |j|_1
/// on the probe box |j|_inf <= 4 in dimension `dim`. Returns warnings for
/// theory preconditions that the implementation does not need:
/// max(c_w/(p-1), c_w/p) must stay below `decay_rate` (the exponential decay
/// of the analysing wavelets; infinite for compact support).
std::vector<std::string> validate(const BesovParams& params, std::size_t dim,
                                  double decay_rate = kInfinity);

/// (sum_k 2^{q delta(k)} S_k^{q/p})^{1/q},
/// S_k = sum_m |lambda_{k,m}|^p 2^{p|k|_1/2} w(Q_{k,m}).
/// p = inf uses sup_m |lambda| 2^{|k|_1/2}; q = inf takes the sup over k.
/// Throws std::invalid_argument if p or q < 1.
double sequence_quasinorm(const CoefficientField& coeffs, const BesovParams& params);

/// Trapezoid approximation of ||f - g||_{L^p_w} over [-R, R]^d with
/// `samples_per_axis` nodes per axis (p = inf: max |f - g|).
double lpw_error(const Function& f, const Function& g, std::size_t dim, double p,
                 const ExponentialWeight& weight, double box_radius,
                 int samples_per_axis);

}  // namespace vbesov
