#pragma once

#include <cstdint>
#include <vector>

#include "gaborgram/gram.hpp"

namespace gabor {

/// Laurent symbol of the Toeplitz block at modulation difference ell:
///   t(x) = sum_{|k| <= m} t_k cos(2 pi k x),  m = floor(N / a).
/// Real, 1-periodic and even in x.
struct LaurentSymbol {
  GaborParams params;
  int ell = 0;
  ToeplitzBlock block;
};

/// Validates params and computes the coefficients.
LaurentSymbol make_symbol(const GaborParams& params, int ell);

/// Symbol with the given coefficients (no window involved); used for
/// synthetic symbols such as constants.
LaurentSymbol symbol_from_coeffs(std::vector<double> coeffs, int ell = 0);

/// Finite cosine sum.
double eval_symbol_coeff(const LaurentSymbol& sym, double x) noexcept;

/// t'(x) = -sum_{k >= 1} 4 pi k t_k sin(2 pi k x).
double eval_symbol_derivative(const LaurentSymbol& sym, double x) noexcept;

/// Sinc-sum form of the symbol for g = s_N:
///   (1/a) sum_r sinc^N((r - x + ab ell/2)/a) sinc^N((r - x - ab ell/2)/a),
/// truncated to |r - round(x)| <= sinc_truncation_radius(...).
/// Throws InvalidArgument for tol <= 0. The identity is only established for
/// N >= 2; see sinc_form_in_hypothesis.
double eval_symbol_sinc(const LaurentSymbol& sym, double x, double tol);

/// R = max(ceil(ab|ell|/2) + ceil(a (2/tol)^{1/(2N-1)}), 8), capped at
/// kMaxSincRadius. The discarded tail is below tol.
std::int64_t sinc_truncation_radius(const GaborParams& params, int ell, double tol);

inline constexpr std::int64_t kMaxSincRadius = std::int64_t{1} << 22;

/// Whether the window order is covered by the sinc-sum identity (N >= 2).
inline bool sinc_form_in_hypothesis(const GaborParams& params) noexcept {
  return params.order >= 2;
}

struct SymbolExtrema {
  double min = 0.0;
  double argmin = 0.0;
  double max = 0.0;
  double argmax = 0.0;

  double width() const noexcept { return max - min; }
};

inline constexpr int kDefaultSymbolGrid = 4096;

/// Global extrema over one period [-1/2, 1/2]: dense sampling, then bisection
/// on sign changes of t' down to width 1e-12. Throws InvalidArgument for grid < 64.
SymbolExtrema symbol_extrema(const LaurentSymbol& sym, int grid = kDefaultSymbolGrid);

/// sup t - inf t for the block at ell.
double spectral_width(const GaborParams& params, int ell, int grid = kDefaultSymbolGrid);

struct DecayFit {
  std::vector<int> ells;
  std::vector<double> widths;
  double slope = 0.0;      ///< least-squares slope of log(width) against log(ell)
  double intercept = 0.0;  ///< log C in width ~ C ell^slope
};

/// Spectral widths over ell in [first, last] and their log-log fit.
/// Throws InvalidArgument unless 1 <= first < last.
DecayFit decay_fit(const GaborParams& params, int first, int last, int grid = kDefaultSymbolGrid);

/// Least-squares line through (log x, log y).
DecayFit fit_power_law(std::vector<int> ells, std::vector<double> widths);

}  // namespace gabor
