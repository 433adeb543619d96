#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vbesov/index_calculus.hpp"

namespace vbesov {

/// Orthonormal Daubechies wavelet with N vanishing moments (2N taps).
/// phi and psi are both supported on [0, 2N - 1].
struct WaveletBasis {
  int family_order = 0;
  std::vector<double> scaling_taps;  // h
  std::vector<double> wavelet_taps;  // g_k = (-1)^k h_{2N-1-k}
  double support_length = 0.0;       // 2N - 1, also the support dilation gamma
  int vanishing_moments = 0;
  int regularity_hint = 0;  // largest L with phi, psi in C^L
};

inline constexpr int kMinFamilyOrder = 2;
inline constexpr int kMaxFamilyOrder = 10;

/// Daubechies-N filters by spectral factorization of the half-band
/// polynomial, keeping the roots inside the unit circle (extremal phase).
/// Throws std::invalid_argument outside [2, 10].
WaveletBasis build_basis(int family_order);

enum class WaveletKind { scaling, wavelet };

/// Samples of phi and psi on 2^-r Z restricted to [0, 2N - 1].
class DyadicTable {
 public:
  const WaveletBasis& basis() const { return basis_; }
  int resolution() const { return resolution_; }
  /// Samples per unit length, 2^r.
  long long samples_per_unit() const { return 1LL << resolution_; }
  std::span<const double> phi() const { return phi_; }
  std::span<const double> psi() const { return psi_; }

  /// phi(t) or psi(t) at the nearest tabulated point; exactly 0 outside
  /// [0, 2N - 1].
  double mother(WaveletKind kind, double t) const;

 private:
  friend DyadicTable tabulate(const WaveletBasis& basis, int resolution);
  WaveletBasis basis_;
  int resolution_ = 0;
  std::vector<double> phi_;
  std::vector<double> psi_;
};

inline constexpr int kDefaultTableResolution = 12;

/// Exact dyadic values via the integer-point eigenproblem followed by
/// repeated two-scale refinement. Throws NumericError if the two-scale
/// residual of the result exceeds 1e-9.
DyadicTable tabulate(const WaveletBasis& basis,
                     int resolution = kDefaultTableResolution);

/// 2^{k/2} phi(2^k x - m) or 2^{k/2} psi(2^k x - m), raw dyadic scale k.
double eval_1d(const DyadicTable& table, WaveletKind kind, int k, long long m,
               double x);

/// Raw dyadic scale of the 1D factor at stored level k: level 0 holds the
/// scaling function at scale 0, level k >= 1 holds the wavelet at scale k-1.
inline int effective_scale(int level) { return level > 0 ? level - 1 : 0; }
inline WaveletKind factor_kind(int level) {
  return level > 0 ? WaveletKind::wavelet : WaveletKind::scaling;
}

/// One coordinate factor of the tensor basis at stored level k.
double eval_factor(const DyadicTable& table, int level, long long m, double x);

/// Tensor basis function psi_{j,m}(x) = prod_i factor(j_i, m_i, x_i).
double eval_tensor(const DyadicTable& table, const LevelIndex& j,
                   const TranslationIndex& m, std::span<const double> x);

/// Support of the 1D factor at stored level k: [lo, hi].
struct Interval {
  double lo;
  double hi;
};
Interval factor_support(const WaveletBasis& basis, int level, long long m);

}  // namespace vbesov
