#pragma once

#include <vector>

#include "gaborgram/bspline.hpp"
#include "gaborgram/matrix.hpp"

namespace gabor {

/// Window and lattice of the Gabor system G(s_N, aZ x bZ).
struct GaborParams {
  double a = 0.25;  ///< time-shift step
  double b = 1.5;   ///< frequency-shift step
  int order = 2;    ///< B-spline order N

  /// floor(N / a): Toeplitz coefficients vanish beyond this offset.
  int bandwidth() const;

  /// Throws InvalidArgument unless a, b > 0, ab < 1 and 1 <= N <= kMaxBSplineOrder.
  void validate() const;

  friend bool operator==(const GaborParams&, const GaborParams&) = default;
};

/// Truncation of the system to the n x n index window I_n x I_n,
/// I_n = {-(n-1)/2, ..., (n-1)/2}.
struct GaborConfig {
  GaborParams params;
  int n = 15;

  int half() const noexcept { return (n - 1) / 2; }
  int dim() const noexcept { return n * n; }

  /// Params checks plus: n odd and n >= 3.
  void validate() const;

  /// n > N/a + 1, i.e. every block's band fits strictly inside the block.
  /// Reported, not enforced: all structural identities hold for any odd n.
  bool strictly_banded() const;

  friend bool operator==(const GaborConfig&, const GaborConfig&) = default;
};

/// Coefficients (t_0, ..., t_m) of one banded real symmetric Toeplitz block;
/// t_{-j} = t_j and t_j = 0 for |j| > m.
struct ToeplitzBlock {
  int ell = 0;
  int bandwidth = 0;
  std::vector<double> coeffs;

  double operator[](int j) const noexcept {
    const int k = j < 0 ? -j : j;
    return k > bandwidth ? 0.0 : coeffs[static_cast<std::size_t>(k)];
  }
};

/// Assembled truncated Gram matrix, rows and columns ordered (j, k) with j major:
/// index(j, k) = (j + h) n + (k + h), h = (n - 1) / 2.
struct GramMatrix {
  GaborConfig config;
  ComplexMatrix entries;

  std::size_t index(int j, int k) const noexcept {
    const int h = config.half();
    return static_cast<std::size_t>((j + h) * config.n + (k + h));
  }
};

/// t_j^[ell] = int g(x - a j / 2) g(x + a j / 2) cos(2 pi b ell x) dx, g = s_N.
double toeplitz_coeff(const GaborParams& params, int ell, int j);

/// All coefficients t_0..t_m for one modulation difference.
ToeplitzBlock toeplitz_block(const GaborParams& params, int ell);

/// G_n^[ell] with entries e^{pi i a b ell (k + k')} t_{k-k'}, k, k' in I_n.
/// Throws InvalidArgument when |ell| >= n.
ComplexMatrix build_block(const GaborConfig& config, int ell);

/// Same, from precomputed coefficients.
ComplexMatrix build_block(const GaborConfig& config, const ToeplitzBlock& block);

/// G_n: block (j, j') is G_n^[j - j']. Validates config.
GramMatrix assemble_gram(const GaborConfig& config);

struct BlockFactors {
  ToeplitzBlock toeplitz;
  std::vector<Complex> phase;  ///< v_k = e^{pi i a b ell k}, k in I_n

  /// T_n as a dense n x n matrix.
  RealMatrix toeplitz_matrix() const;
  /// H_n = v v^T.
  ComplexMatrix hankel_matrix() const;
  /// T o H (entrywise).
  ComplexMatrix hadamard_product() const;
  /// D T D with D = diag(v).
  ComplexMatrix diagonal_similarity() const;
};

BlockFactors extract_factors(const GaborConfig& config, int ell);

/// Full-size factors of G_n: block (j, j') of T is T_n^[j - j'] and of H is
/// H_n^[j - j'], so that G_n = T o H.
struct GramFactors {
  RealMatrix toeplitz;
  ComplexMatrix hankel;
};

GramFactors assemble_factors(const GaborConfig& config);

/// Dense n x n symmetric Toeplitz matrix from its coefficients.
RealMatrix toeplitz_matrix(const ToeplitzBlock& block, int n);

/// Gram matrix of the lattice shifted by (a s, b t): block (j, j') gains
/// the phase e^{2 pi i a b s (j - j')}. Independent of t.
ComplexMatrix apply_lattice_shift(const GaborConfig& config, double s, double t);

/// max |conj(G_{k,k'}) - G_{-k',-k}| over the block G_n^[ell].
double check_per_hermitian(const GaborConfig& config, int ell);

/// max |conj(G_{(j,k),(j',k')}) - G_{(-j',-k'),(-j,-k)}| over the full matrix.
double per_hermitian_deviation(const GramMatrix& gram);

/// max over blocks of |block(j, j') - block(j+1, j'+1)|.
double block_toeplitz_deviation(const GramMatrix& gram);

/// Block (j, j') of an assembled Gram matrix as an n x n matrix.
ComplexMatrix gram_block(const GramMatrix& gram, int j, int jp);

}  // namespace gabor
