#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "vbesov/errors.hpp"
#include "vbesov/wavelet.hpp"

namespace vbesov {

namespace {

using cld = std::complex<long double>;

// floor of the Hoelder exponent of Daubechies-N, N = 2..10
constexpr std::array<int, 11> kRegularity = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3};

long double binomial(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

cld eval_poly(const std::vector<long double>& c, cld y) {
  cld acc = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
  return acc;
}

cld eval_derivative(const std::vector<long double>& c, cld y) {
  cld acc = 0.0L;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    acc = acc * y + static_cast<long double>(k) * c[k];
  }
  return acc;
}

// Roots of sum_k c_k y^k (ascending coefficients) via the companion matrix,
// polished by Newton steps in extended precision.
std::vector<cld> polynomial_roots(const std::vector<long double>& c) {
  const int deg = static_cast<int>(c.size()) - 1;
  std::vector<cld> roots;
  if (deg < 1) return roots;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i)
    companion(i, deg - 1) = static_cast<double>(-c[i] / c[deg]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericError("companion eigenvalue solve failed");
  for (int i = 0; i < deg; ++i) {
    cld y(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 8; ++it) {
      const cld d = eval_derivative(c, y);
      if (std::abs(d) == 0.0L) break;
      y -= eval_poly(c, y) / d;
    }
    roots.push_back(y);
  }
  return roots;
}

std::vector<cld> multiply(const std::vector<cld>& a, const std::vector<cld>& b) {
  std::vector<cld> out(a.size() + b.size() - 1, 0.0L);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

WaveletBasis build_basis(int family_order) {
  const int N = family_order;
  if (N < kMinFamilyOrder || N > kMaxFamilyOrder)
    throw std::invalid_argument("unsupported Daubechies order " + std::to_string(N) +
                                " (supported: 2..10)");

  // |Q(e^{iw})|^2 = P(sin^2(w/2)), P(y) = sum_k C(N-1+k, k) y^k
  std::vector<long double> half_band(N);
  for (int k = 0; k < N; ++k) half_band[k] = binomial(N - 1 + k, k);

  std::vector<cld> poly = {1.0L};
  for (int i = 0; i < N; ++i) poly = multiply(poly, {1.0L, 1.0L});
  for (const cld& y : polynomial_roots(half_band)) {
    // z + 1/z = 2 - 4y; keep the root inside the unit circle
    const cld s = 2.0L - 4.0L * y;
    const cld disc = std::sqrt(s * s - 4.0L);
    cld z = (s - disc) / 2.0L;
    if (std::abs(z) > 1.0L) z = (s + disc) / 2.0L;
    poly = multiply(poly, {-z, 1.0L});
  }

  long double sum = 0.0L;
  for (const auto& c : poly) sum += c.real();
  const long double scale = std::sqrt(2.0L) / sum;

  WaveletBasis basis;
  basis.family_order = N;
  const int taps = 2 * N;
  basis.scaling_taps.resize(taps);
  for (int k = 0; k < taps; ++k)
    basis.scaling_taps[k] = static_cast<double>(poly[taps - 1 - k].real() * scale);
  basis.wavelet_taps.resize(taps);
  for (int k = 0; k < taps; ++k)
    basis.wavelet_taps[k] = (k % 2 == 0 ? 1.0 : -1.0) * basis.scaling_taps[taps - 1 - k];
  basis.support_length = taps - 1;
  basis.vanishing_moments = N;
  basis.regularity_hint = kRegularity[N];

  long double tap_sum = 0.0L;
  for (double h : basis.scaling_taps) tap_sum += h;
  if (std::abs(tap_sum - std::sqrt(2.0L)) > 1e-12L)
    throw NumericError("Daubechies filter normalization failed");
  for (int l = 0; l < N; ++l) {
    long double acc = 0.0L;
    for (int k = 0; k + 2 * l < taps; ++k)
      acc += static_cast<long double>(basis.scaling_taps[k]) * basis.scaling_taps[k + 2 * l];
    if (std::abs(acc - (l == 0 ? 1.0L : 0.0L)) > 1e-12L)
      throw NumericError("Daubechies filter is not shift-orthonormal");
  }
  return basis;
}

namespace {

// phi at the integers 0..2N-1: eigenvector of M_{ik} = sqrt(2) h_{2i-k} for
// eigenvalue 1, normalized to unit sum.
std::vector<double> integer_values(const WaveletBasis& basis) {
  const int taps = static_cast<int>(basis.scaling_taps.size());
  const int n = taps;  // points 0..2N-1
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(n + 1, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const int t = 2 * i - k;
      if (t >= 0 && t < taps) system(i, k) = std::sqrt(2.0) * basis.scaling_taps[t];
    }
    system(i, i) -= 1.0;
  }
  system.row(n).setOnes();
  rhs(n) = 1.0;
  Eigen::VectorXd v = system.colPivHouseholderQr().solve(rhs);
  if ((system * v - rhs).norm() > 1e-10)
    throw NumericError("cascade: no eigenvector for the integer values of phi");
  return {v.data(), v.data() + v.size()};
}

// out[n] = sqrt(2) sum_k taps_k coarse[n - k 2^{l-1}], fine grid of level l.
std::vector<double> refine(const std::vector<double>& coarse,
                           const std::vector<double>& taps, long long fine_points,
                           long long coarse_step) {
  std::vector<double> fine(static_cast<std::size_t>(fine_points), 0.0);
  const long long coarse_points = static_cast<long long>(coarse.size());
  const double r2 = std::sqrt(2.0);
  for (long long n = 0; n < fine_points; ++n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < taps.size(); ++k) {
      const long long idx = n - static_cast<long long>(k) * coarse_step;
      if (idx >= 0 && idx < coarse_points) acc += taps[k] * coarse[idx];
    }
    fine[n] = r2 * acc;
  }
  return fine;
}

}  // namespace

DyadicTable tabulate(const WaveletBasis& basis, int resolution) {
  if (resolution < 1) throw std::invalid_argument("table resolution must be >= 1");
  if (resolution > 24) throw std::invalid_argument("table resolution must be <= 24");
  const long long span = static_cast<long long>(basis.support_length);

  std::vector<double> phi = integer_values(basis);
  std::vector<double> phi_coarse;
  for (int l = 1; l <= resolution; ++l) {
    const long long points = span * (1LL << l) + 1;
    auto next = refine(phi, basis.scaling_taps, points, 1LL << (l - 1));
    phi_coarse = std::move(phi);
    phi = std::move(next);
  }
  const long long points = span * (1LL << resolution) + 1;
  auto psi = refine(phi_coarse, basis.wavelet_taps, points, 1LL << (resolution - 1));

  // two-scale residual phi(x) - sqrt2 sum h_k phi(2x - k) on even samples
  const long long per_unit = 1LL << resolution;
  const double r2 = std::sqrt(2.0);
  double residual = 0.0;
  for (long long n = 0; 2 * n < points; ++n) {
    // x = 2n / 2^r, 2x - k = (4n - k 2^r) / 2^r
    double acc = 0.0;
    for (std::size_t k = 0; k < basis.scaling_taps.size(); ++k) {
      const long long idx = 4 * n - static_cast<long long>(k) * per_unit;
      if (idx >= 0 && idx < points) acc += basis.scaling_taps[k] * phi[idx];
    }
    residual = std::max(residual, std::abs(phi[2 * n] - r2 * acc));
  }
  if (!(residual < 1e-9))
    throw NumericError("cascade did not converge: two-scale residual " +
                       std::to_string(residual));

  DyadicTable table;
  table.basis_ = basis;
  table.resolution_ = resolution;
  table.phi_ = std::move(phi);
  table.psi_ = std::move(psi);
  return table;
}

double DyadicTable::mother(WaveletKind kind, double t) const {
  if (!(t > 0.0 && t < basis_.support_length)) return 0.0;
  const auto idx = static_cast<std::size_t>(std::llround(std::ldexp(t, resolution_)));
  const auto& values = kind == WaveletKind::scaling ? phi_ : psi_;
  return idx < values.size() ? values[idx] : 0.0;
}

double eval_1d(const DyadicTable& table, WaveletKind kind, int k, long long m,
               double x) {
  const double t = std::ldexp(x, k) - static_cast<double>(m);
  const double v = table.mother(kind, t);
  return v == 0.0 ? 0.0 : std::pow(2.0, 0.5 * k) * v;
}

double eval_factor(const DyadicTable& table, int level, long long m, double x) {
  return eval_1d(table, factor_kind(level), effective_scale(level), m, x);
}

double eval_tensor(const DyadicTable& table, const LevelIndex& j,
                   const TranslationIndex& m, std::span<const double> x) {
  if (j.dim() != m.dim() || j.dim() != x.size())
    throw DimensionError("eval_tensor: dimensions of j, m and x differ");
  double prod = 1.0;
  for (std::size_t i = 0; i < j.dim() && prod != 0.0; ++i)
    prod *= eval_factor(table, j[i], m[i], x[i]);
  return prod;
}

Interval factor_support(const WaveletBasis& basis, int level, long long m) {
  const int k = effective_scale(level);
  return {std::ldexp(static_cast<double>(m), -k),
          std::ldexp(static_cast<double>(m) + basis.support_length, -k)};
}

}  // namespace vbesov
