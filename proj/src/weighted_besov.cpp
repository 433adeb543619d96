#include "vbesov/weighted_besov.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vbesov/errors.hpp"
#include "vbesov/parallel.hpp"

namespace vbesov {

ExponentialWeight::ExponentialWeight(double rate) : rate_(rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate))
    throw std::invalid_argument("weight rate must be finite and >= 0");
}

double ExponentialWeight::operator()(std::span<const double> x) const {
  double n1 = 0.0;
  for (double v : x) n1 += std::abs(v);
  return std::exp(rate_ * n1);
}

DyadicBox::DyadicBox(LevelIndex j, TranslationIndex m)
    : level(std::move(j)), translation(std::move(m)) {
  if (level.dim() != translation.dim())
    throw DimensionError("dyadic box: level and translation dimensions differ");
}

double DyadicBox::lower(std::size_t axis) const {
  return std::ldexp(static_cast<double>(translation[axis]), -level[axis]);
}

double DyadicBox::upper(std::size_t axis) const {
  return std::ldexp(static_cast<double>(translation[axis]) + 1.0, -level[axis]);
}

double DyadicBox::volume() const { return std::ldexp(1.0, -level.l1()); }

double interval_weight(double rate, double a, double b) {
  if (b < a) throw std::invalid_argument("interval_weight: empty interval");
  if (rate == 0.0) return b - a;
  if (a < 0.0 && b > 0.0) return interval_weight(rate, a, 0.0) + interval_weight(rate, 0.0, b);
  // on one side of 0 the integrand is exp(rate |x|), |x| running over [lo, hi]
  const double lo = a >= 0.0 ? a : -b;
  const double hi = a >= 0.0 ? b : -a;
  return std::exp(rate * lo) * std::expm1(rate * (hi - lo)) / rate;
}

double weight_measure(const ExponentialWeight& weight, const DyadicBox& box) {
  double prod = 1.0;
  for (std::size_t i = 0; i < box.level.dim(); ++i)
    prod *= interval_weight(weight.rate(), box.lower(i), box.upper(i));
  return prod;
}

std::vector<std::string> validate(const BesovParams& params, std::size_t dim,
                                  double decay_rate) {
  if (!(params.p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (!(params.q >= 1.0)) throw std::invalid_argument("q must be >= 1");
  if (params.L < 1) throw std::invalid_argument("L must be >= 1");
  if (!check_smoothness_bound(params.delta, params.L, 4, dim)) {
    std::ostringstream msg;
    msg << "delta(j) < L |j|_1 fails for L = " << params.L;
    throw std::invalid_argument(msg.str());
  }
  std::vector<std::string> warnings;
  const double cw = params.weight.growth_constant();
  if (cw > 0.0) {
    const double need = params.p > 1.0 ? std::max(cw / (params.p - 1.0), cw / params.p)
                                       : kInfinity;
    if (!(need < decay_rate)) {
      std::ostringstream msg;
      msg << "weight growth c_w = " << cw << " needs wavelet decay rate above " << need
          << ", have " << decay_rate;
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

double sequence_quasinorm(const CoefficientField& coeffs, const BesovParams& params) {
  const double p = params.p;
  const double q = params.q;
  if (!(p >= 1.0)) throw std::invalid_argument("sequence_quasinorm: p must be >= 1");
  if (!(q >= 1.0)) throw std::invalid_argument("sequence_quasinorm: q must be >= 1");

  double outer = 0.0;
  for (const auto& [k, row] : coeffs.levels()) {
    const double half_l1 = 0.5 * k.l1();
    // level term T_k = S_k^{1/p}
    double level_norm;
    if (std::isinf(p)) {
      double sup = 0.0;
      for (const auto& [m, lambda] : row) sup = std::max(sup, std::abs(lambda));
      level_norm = sup * std::exp2(half_l1);
    } else {
      double s = 0.0;
      for (const auto& [m, lambda] : row)
        s += std::pow(std::abs(lambda), p) * std::exp2(p * half_l1) *
             weight_measure(params.weight, DyadicBox(k, m));
      level_norm = std::pow(s, 1.0 / p);
    }
    const double weighted = std::exp2(params.delta(k)) * level_norm;
    if (std::isinf(q))
      outer = std::max(outer, weighted);
    else
      outer += std::pow(weighted, q);
  }
  return std::isinf(q) ? outer : std::pow(outer, 1.0 / q);
}

double lpw_error(const Function& f, const Function& g, std::size_t dim, double p,
                 const ExponentialWeight& weight, double box_radius,
                 int samples_per_axis) {
  if (dim == 0) throw std::invalid_argument("lpw_error: dimension must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("lpw_error: p must be >= 1");
  if (samples_per_axis < 8) throw std::invalid_argument("lpw_error: need >= 8 samples per axis");
  if (!(box_radius > 0.0)) throw std::invalid_argument("lpw_error: box_radius must be > 0");

  const auto n = static_cast<std::size_t>(samples_per_axis);
  const double step = 2.0 * box_radius / static_cast<double>(n - 1);
  std::size_t slice = 1;
  for (std::size_t a = 1; a < dim; ++a) slice *= n;

  // per-slice partial sums, combined in order
  std::vector<double> partial(n, 0.0);
  parallel_for(n, [&](std::size_t i0) {
    std::vector<double> x(dim);
    std::vector<std::size_t> idx(dim, 0);
    idx[0] = i0;
    double acc = 0.0;
    for (std::size_t s = 0; s < slice; ++s) {
      std::size_t rem = s;
      for (std::size_t a = dim; a-- > 1;) {
        idx[a] = rem % n;
        rem /= n;
      }
      double node_weight = 1.0;
      for (std::size_t a = 0; a < dim; ++a) {
        x[a] = -box_radius + static_cast<double>(idx[a]) * step;
        if (idx[a] == 0 || idx[a] == n - 1) node_weight *= 0.5;
      }
      const double diff = std::abs(f(x) - g(x));
      if (std::isinf(p))
        acc = std::max(acc, diff);
      else if (diff != 0.0)
        acc += node_weight * std::pow(diff, p) * weight(x);
    }
    partial[i0] = acc;
  });

  if (std::isinf(p)) {
    double sup = 0.0;
    for (double v : partial) sup = std::max(sup, v);
    return sup;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return std::pow(total * std::pow(step, static_cast<double>(dim)), 1.0 / p);
}

}  // namespace vbesov
