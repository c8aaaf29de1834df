#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gaborgram/eigen.hpp"
#include "gaborgram/gram.hpp"
#include "gaborgram/symbol.hpp"

namespace gabor {

// ---------------------------------------------------------------------------
// Circulant approximation of banded Toeplitz blocks
// ---------------------------------------------------------------------------

struct CirculantSpectrum {
  /// c_k = t_{-k} for k <= m, t_{n-k} for k >= n - m, 0 otherwise;
  /// the matrix is C_{i,j} = c_{(j - i) mod n}.
  std::vector<double> first_row;
  /// t(p / n) for p = 0..n-1, in p order (not sorted).
  std::vector<double> eigenvalues;
  /// max_p ||C f_p - t(p/n) f_p||_inf over the Fourier vectors f_p.
  double fourier_check = 0.0;
};

/// Throws InvalidArgument when n <= 2 * bandwidth, ConvergenceError when the
/// Fourier-vector check exceeds 1e-10 * (1 + max|t|).
CirculantSpectrum circulant_from_symbol(const LaurentSymbol& sym, int n);

/// Dense circulant matrix from its first row.
RealMatrix circulant_matrix(const std::vector<double>& first_row);

/// (1/n sum |T_n - C_n|^2)^{1/2}. Throws InvalidArgument when n <= 2 * bandwidth.
double asymptotic_equivalence_gap(const LaurentSymbol& sym, int n);

struct EigenComparison {
  int n = 0;
  std::vector<double> toeplitz;   ///< sorted eigenvalues of T_n
  std::vector<double> circulant;  ///< sorted t(p/n)
  double moment1 = 0.0;           ///< (1/n) sum (lambda_m - psi_m)
  double moment2 = 0.0;           ///< (1/n) sum (lambda_m^2 - psi_m^2)
  double mean_abs_diff = 0.0;     ///< (1/n) sum |lambda_m - psi_m|
};

/// For each n: sorted spectra of T_n (real symmetric solve) and C_n, and their moment gaps.
std::vector<EigenComparison> eigen_comparison_trace(const LaurentSymbol& sym,
                                                    const std::vector<int>& n_list);

struct SzegoResult {
  double lhs = 0.0;  ///< (1/n) sum F(lambda_m(T_n))
  double rhs = 0.0;  ///< int_0^1 F(t(x)) dx, composite Simpson on 2^14 panels
  double gap = 0.0;
};

SzegoResult szego_check(const LaurentSymbol& sym, int n, const std::function<double(double)>& f);

/// Composite Simpson rule for int_0^1 F(t(x)) dx.
double symbol_average(const LaurentSymbol& sym, const std::function<double(double)>& f,
                      int panels = 1 << 14);

// ---------------------------------------------------------------------------
// Interlacing and frame bounds of the truncated Gram matrix
// ---------------------------------------------------------------------------

inline constexpr int kMaxFullGramN = 21;
inline constexpr double kInterlacingSlack = 1e-9;

struct InterlacingReport {
  GaborConfig config;
  std::vector<double> gram_eigenvalues;    ///< n^2, ascending
  std::vector<double> block0_eigenvalues;  ///< n, ascending
  /// lambda_k(G_n) <= lambda_k(G_n^[0]) <= lambda_{k+n^2-n}(G_n), k = 1..n.
  std::vector<bool> inequality_holds;
  bool all_hold = false;
  SymbolExtrema symbol;         ///< extrema of t^[0]
  bool lower_estimate = false;  ///< lambda_1(G_n) <= inf t^[0] + slack
  bool upper_estimate = false;  ///< sup t^[0] <= lambda_{n^2}(G_n) + slack
  double residual = 0.0;        ///< worst eigensolver residual of the two solves
};

/// Throws InvalidArgument when n > kMaxFullGramN.
InterlacingReport interlacing_check(const GaborConfig& config);

/// Smallest n in the list from which both symbol estimates hold for every
/// later n in the list; empty if they fail at the last n.
std::optional<int> estimate_threshold(const std::vector<InterlacingReport>& reports);

struct FrameBoundTrace {
  GaborParams params;
  std::vector<int> ns;
  std::vector<double> lower;  ///< A_n = lambda_min(G_n)
  std::vector<double> upper;  ///< B_n = lambda_max(G_n)
  bool lower_nonincreasing = false;
  bool upper_nondecreasing = false;
  /// lambda_min(G_n) > slack * lambda_max(G_n) at every n.
  bool numerically_invertible = false;
  /// Present when a = 1/p for an integer p >= 2: whether A_n strictly decreases.
  std::optional<bool> rational_degeneration;
  std::optional<int> rational_p;
};

/// Throws InvalidArgument unless the list is odd, ascending and <= kMaxFullGramN.
FrameBoundTrace frame_bound_trace(const GaborParams& params, const std::vector<int>& n_list);

/// p when a = 1/p (to 1e-12) with integer p >= 2.
std::optional<int> rational_lattice_p(double a);

}  // namespace gabor
