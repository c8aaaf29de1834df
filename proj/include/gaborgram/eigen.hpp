#pragma once

#include <vector>

#include "gaborgram/matrix.hpp"

namespace gabor {

struct EigenOptions {
  /// Accumulate eigenvectors so the residual can be measured on sampled pairs.
  bool vectors = false;
  int max_sweeps = 60;
  /// Stop once the off-diagonal Frobenius norm is below tol * ||A||_F.
  double tol = 1e-13;
};

/// Sorted eigenvalues of a symmetric/Hermitian matrix plus a backward-error measure.
struct SpectrumReport {
  std::vector<double> eigenvalues;  ///< ascending
  std::size_t matrix_dim = 0;
  /// With vectors: max over up to 5 sampled pairs of ||Mv - lambda v|| / ||M||_2.
  /// Without: max of the relative mismatches of sum(lambda) vs tr M and
  /// sum(lambda^2) vs ||M||_F^2.
  double residual = 0.0;
  int sweeps = 0;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Cyclic-by-row Jacobi on a real symmetric matrix.
/// Throws InvalidArgument if the input is not symmetric to 1e-10 * max|A|,
/// ConvergenceError if max_sweeps is exhausted.
SpectrumReport symmetric_eigenvalues(const RealMatrix& m, const EigenOptions& options = {});

/// Hermitian eigenvalues through the real symmetric embedding
/// [[Re M, -Im M], [Im M, Re M]], whose spectrum is that of M doubled.
/// Throws ConvergenceError if the doubled spectrum fails to pair up.
SpectrumReport hermitian_eigenvalues(const ComplexMatrix& m, const EigenOptions& options = {});

/// Singular values (descending) from the Hermitian dilation [[0, A], [A*, 0]].
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace gabor
