#include "vbesov/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vbesov/errors.hpp"
#include "vbesov/parallel.hpp"

namespace vbesov {

namespace {

// Banded operator along one axis: row r covers samples
// [offset[r], offset[r] + band.size()) with the same weights for every row.
struct AxisBand {
  long long m_lo = 0;
  std::vector<long long> offsets;
  std::vector<double> band;
};

std::vector<double> contract_axis(const std::vector<double>& in,
                                  std::vector<std::size_t>& shape, std::size_t axis,
                                  const AxisBand& op) {
  std::size_t outer = 1, inner = 1;
  for (std::size_t a = 0; a < axis; ++a) outer *= shape[a];
  for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  const std::size_t na = shape[axis];
  const std::size_t rows = op.offsets.size();
  std::vector<double> out(outer * rows * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t r = 0; r < rows; ++r) {
      double* dst = out.data() + (o * rows + r) * inner;
      const auto off = static_cast<std::size_t>(op.offsets[r]);
      for (std::size_t t = 0; t < op.band.size(); ++t) {
        const double w = op.band[t];
        if (w == 0.0) continue;
        const double* src = in.data() + (o * na + off + t) * inner;
        for (std::size_t q = 0; q < inner; ++q) dst[q] += w * src[q];
      }
    }
  }
  shape[axis] = rows;
  return out;
}

}  // namespace

TranslationRange translations_meeting_box(const WaveletBasis& basis, int level,
                                          double radius) {
  const double scaled = std::ldexp(radius, effective_scale(level));
  // open support (m, m + gamma) 2^-k meets [-R, R]
  return {static_cast<long long>(std::floor(-scaled - basis.support_length)) + 1,
          static_cast<long long>(std::ceil(scaled)) - 1};
}

CoefficientField analyze(const Function& f, std::size_t dim, const DyadicTable& table,
                         const AnalysisOptions& options) {
  if (dim == 0) throw std::invalid_argument("analyze: dimension must be >= 1");
  if (options.max_level < 0) throw std::invalid_argument("analyze: max_level must be >= 0");
  if (!(options.domain_radius > 0.0))
    throw std::invalid_argument("analyze: domain_radius must be > 0");

  std::vector<LevelIndex> levels = options.only_levels
                                       ? *options.only_levels
                                       : levels_in_box(dim, options.max_level);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  int top = 0;
  for (const auto& j : levels) {
    if (j.dim() != dim) throw DimensionError("analyze: level dimension mismatch");
    top = std::max(top, j.linf());
  }
  if (top > options.max_level)
    throw std::invalid_argument("analyze: requested level above max_level");
  if (options.quad_resolution < options.max_level + 2)
    throw NumericError("analyze: quad_resolution " + std::to_string(options.quad_resolution) +
                       " undersamples level " + std::to_string(options.max_level) +
                       " (need >= max_level + 2)");

  CoefficientField field(dim);
  if (levels.empty()) return field;

  const WaveletBasis& basis = table.basis();
  const int qr = options.quad_resolution;
  const double h = std::ldexp(1.0, -qr);
  const double reach = options.domain_radius + basis.support_length;
  const auto i_lo = static_cast<long long>(std::floor(-reach / h));
  const auto i_hi = static_cast<long long>(std::ceil(reach / h));
  const auto n = static_cast<std::size_t>(i_hi - i_lo + 1);

  std::size_t total = 1;
  for (std::size_t a = 0; a < dim; ++a) {
    if (total > kMaxAnalysisSamples / n)
      throw std::invalid_argument("analyze: sample grid too large (" + std::to_string(n) +
                                  " points per axis in dimension " + std::to_string(dim) +
                                  "); lower quad_resolution or domain_radius");
    total *= n;
  }

  // f on the sample grid, axis 0 slowest
  std::vector<double> samples(total);
  const std::size_t slice = total / n;
  parallel_for(n, [&](std::size_t i0) {
    std::vector<double> x(dim);
    std::vector<std::size_t> idx(dim, 0);
    idx[0] = i0;
    for (std::size_t s = 0; s < slice; ++s) {
      std::size_t rem = s;
      for (std::size_t a = dim; a-- > 1;) {
        idx[a] = rem % n;
        rem /= n;
      }
      for (std::size_t a = 0; a < dim; ++a)
        x[a] = static_cast<double>(i_lo + static_cast<long long>(idx[a])) * h;
      samples[i0 * slice + s] = f(x);
    }
  });

  // One band per distinct level value along an axis.
  std::vector<AxisBand> bands(static_cast<std::size_t>(options.max_level) + 1);
  for (int k = 0; k <= options.max_level; ++k) {
    auto& b = bands[k];
    const long long stride = 1LL << (qr - effective_scale(k));
    const auto width = static_cast<long long>(basis.support_length) * stride + 1;
    b.band.resize(static_cast<std::size_t>(width));
    for (long long t = 0; t < width; ++t)
      b.band[t] = eval_factor(table, k, 0, static_cast<double>(t) * h) * h;
    const auto range = translations_meeting_box(basis, k, options.domain_radius);
    b.m_lo = range.lo;
    for (long long m = range.lo; m <= range.hi; ++m) b.offsets.push_back(m * stride - i_lo);
  }

  std::vector<std::vector<std::pair<TranslationIndex, double>>> results(levels.size());
  parallel_for(levels.size(), [&](std::size_t li) {
    const LevelIndex& j = levels[li];
    std::vector<std::size_t> shape(dim, n);
    std::vector<double> cur = contract_axis(samples, shape, 0, bands[j[0]]);
    for (std::size_t a = 1; a < dim; ++a) cur = contract_axis(cur, shape, a, bands[j[a]]);

    auto& out = results[li];
    std::vector<std::size_t> idx(dim, 0);
    std::vector<int> m(dim);
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      std::size_t rem = flat;
      for (std::size_t a = dim; a-- > 0;) {
        idx[a] = rem % shape[a];
        rem /= shape[a];
      }
      if (std::abs(cur[flat]) < kPruneThreshold) continue;
      for (std::size_t a = 0; a < dim; ++a)
        m[a] = static_cast<int>(bands[j[a]].m_lo + static_cast<long long>(idx[a]));
      out.emplace_back(TranslationIndex(m), cur[flat]);
    }
  });

  for (std::size_t li = 0; li < levels.size(); ++li)
    for (const auto& [m, lambda] : results[li]) field.set(levels[li], m, lambda);
  return field;
}

namespace {

struct Candidates {
  long long lo = 0;
  std::vector<double> values;  // factor value for m = lo + i
};

Candidates factor_candidates(const DyadicTable& table, int level, double x) {
  const double gamma = table.basis().support_length;
  const double t = std::ldexp(x, effective_scale(level));
  Candidates c;
  c.lo = static_cast<long long>(std::ceil(t - gamma));
  const auto hi = static_cast<long long>(std::floor(t));
  for (long long m = c.lo; m <= hi; ++m) c.values.push_back(eval_factor(table, level, m, x));
  return c;
}

// Calls visit(m, product) for every combination of per-axis candidates with a
// nonzero product.
template <typename Visit>
void for_each_combination(const std::vector<Candidates>& axes, Visit&& visit) {
  const std::size_t dim = axes.size();
  for (const auto& c : axes)
    if (c.values.empty()) return;
  std::vector<std::size_t> pos(dim, 0);
  std::vector<long long> m(dim);
  while (true) {
    double prod = 1.0;
    for (std::size_t a = 0; a < dim; ++a) {
      prod *= axes[a].values[pos[a]];
      m[a] = axes[a].lo + static_cast<long long>(pos[a]);
    }
    if (prod != 0.0) visit(m, prod);
    std::size_t a = dim;
    while (a-- > 0) {
      if (++pos[a] < axes[a].values.size()) break;
      pos[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

double reconstruct(const CoefficientField& coeffs, const DyadicTable& table,
                   std::span<const double> x) {
  if (coeffs.empty()) return 0.0;
  if (x.size() != coeffs.dim()) throw DimensionError("reconstruct: point dimension mismatch");
  const std::size_t dim = x.size();
  double acc = 0.0;
  std::vector<Candidates> axes(dim);
  for (const auto& [j, row] : coeffs.levels()) {
    for (std::size_t a = 0; a < dim; ++a) axes[a] = factor_candidates(table, j[a], x[a]);
    for_each_combination(axes, [&](const std::vector<long long>& m, double prod) {
      auto it = row.find(TranslationIndex(std::vector<int>(m.begin(), m.end())));
      if (it != row.end()) acc += it->second * prod;
    });
  }
  return acc;
}

namespace {

constexpr long long kDenseSynthesisLimit = 1LL << 22;

}  // namespace

Synthesizer::Synthesizer(const CoefficientField& coeffs, const DyadicTable& table)
    : table_(&table), dim_(coeffs.dim()) {
  for (const auto& [j, row] : coeffs.levels()) {
    LevelData data;
    data.level = j;
    data.lo.assign(dim_, 0);
    data.hi.assign(dim_, 0);
    data.stride.assign(dim_, 0);
    bool first = true;
    for (const auto& [m, lambda] : row) {
      (void)lambda;
      for (std::size_t a = 0; a < dim_; ++a) {
        data.lo[a] = first ? m[a] : std::min<long long>(data.lo[a], m[a]);
        data.hi[a] = first ? m[a] : std::max<long long>(data.hi[a], m[a]);
      }
      first = false;
    }
    long long stride = 1;
    bool dense = true;
    for (std::size_t a = dim_; a-- > 0;) {
      data.stride[a] = stride;
      const long long extent = data.hi[a] - data.lo[a] + 1;
      if (stride > kDenseSynthesisLimit / extent) dense = false;
      stride *= dense ? extent : 1;
    }
    if (dense) data.dense.assign(static_cast<std::size_t>(stride), 0.0);
    if (!dense) {
      stride = 1;
      for (std::size_t a = dim_; a-- > 0;) {
        data.stride[a] = stride;
        stride *= data.hi[a] - data.lo[a] + 1;
      }
    }
    for (const auto& [m, lambda] : row) {
      long long key = 0;
      for (std::size_t a = 0; a < dim_; ++a) key += (m[a] - data.lo[a]) * data.stride[a];
      if (dense)
        data.dense[static_cast<std::size_t>(key)] = lambda;
      else
        data.sparse.emplace(key, lambda);
    }
    levels_.push_back(std::move(data));
  }
}

double Synthesizer::operator()(std::span<const double> x) const {
  if (levels_.empty()) return 0.0;
  if (x.size() != dim_) throw DimensionError("synthesizer: point dimension mismatch");
  const double gamma = table_->basis().support_length;
  // per axis: first translation and factor values; at most 2N candidates each
  thread_local std::vector<long long> first, count;
  thread_local std::vector<double> values;
  const std::size_t width = static_cast<std::size_t>(gamma) + 2;
  first.resize(dim_);
  count.resize(dim_);
  values.resize(dim_ * width);

  double acc = 0.0;
  for (const auto& lvl : levels_) {
    bool inside = true;
    for (std::size_t a = 0; a < dim_ && inside; ++a) {
      const int level = lvl.level[a];
      const double t = std::ldexp(x[a], effective_scale(level));
      const long long lo = std::max(static_cast<long long>(std::ceil(t - gamma)), lvl.lo[a]);
      const long long hi = std::min(static_cast<long long>(std::floor(t)), lvl.hi[a]);
      first[a] = lo;
      count[a] = std::max(0LL, hi - lo + 1);
      for (long long i = 0; i < count[a]; ++i)
        values[a * width + i] = eval_factor(*table_, level, lo + i, x[a]);
      inside = count[a] > 0;
    }
    if (!inside) continue;
    auto lookup = [&lvl](long long key) {
      if (!lvl.dense.empty()) return lvl.dense[static_cast<std::size_t>(key)];
      const auto it = lvl.sparse.find(key);
      return it == lvl.sparse.end() ? 0.0 : it->second;
    };
    auto sum_axis = [&](auto&& self, std::size_t a, long long key) -> double {
      double s = 0.0;
      for (long long i = 0; i < count[a]; ++i) {
        const double v = values[a * width + i];
        if (v == 0.0) continue;
        const long long k = key + (first[a] + i - lvl.lo[a]) * lvl.stride[a];
        s += v * (a + 1 == dim_ ? lookup(k) : self(self, a + 1, k));
      }
      return s;
    };
    acc += sum_axis(sum_axis, 0, 0);
  }
  return acc;
}

}  // namespace vbesov
