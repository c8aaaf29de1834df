#pragma once

#include "gaborgram/poly.hpp"

namespace gabor {

/// Largest supported order; beyond this the monomial coefficients of the
/// degree N-1 pieces are no longer trustworthy in double precision.
inline constexpr int kMaxBSplineOrder = 25;

/// Centered cardinal B-spline s_N, supported on [-N/2, N/2] with unit knots.
struct BSpline {
  int order = 1;
  PiecewisePolynomial poly;

  double operator()(double x) const noexcept { return eval(poly, x); }
};

enum class BSplineConstruction {
  /// s_N = s_1 * s_{N-1}, carried out exactly on the polynomial pieces.
  kConvolution,
  /// Truncated-power divided-difference formula
  ///   s_N(x) = 1/(N-1)! sum_k (-1)^k C(N,k) (x + N/2 - k)_+^{N-1}.
  kTruncatedPower,
};

/// Throws InvalidArgument for N < 1 or N > kMaxBSplineOrder.
BSpline build_bspline(int order, BSplineConstruction method = BSplineConstruction::kConvolution);

/// Fourier transform of s_N: sinc^N(xi) with sinc(x) = sin(pi x) / (pi x).
double fourier_sinc(int order, double xi) noexcept;

/// sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x) noexcept;

}  // namespace gabor
