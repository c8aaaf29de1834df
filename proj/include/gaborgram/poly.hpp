#pragma once

#include <span>
#include <vector>

namespace gabor {

/// Real function on R given by breakpoints and one polynomial per interval.
///
/// Piece i lives on [breakpoints[i], breakpoints[i+1]] and its coefficients
/// are in the monomial basis centered at that interval's left endpoint:
///   p(x) = sum_m pieces[i][m] * (x - breakpoints[i])^m.
/// The function is zero outside [breakpoints.front(), breakpoints.back()].
/// An empty coefficient vector is the zero polynomial.
class PiecewisePolynomial {
 public:
  /// Canonical zero function: breakpoints {0, 1}, one empty piece.
  PiecewisePolynomial();

  /// Throws InvalidArgument unless breakpoints are strictly increasing,
  /// there are at least two, and pieces.size() == breakpoints.size() - 1.
  PiecewisePolynomial(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces);

  static PiecewisePolynomial zero() { return {}; }

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<std::vector<double>>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }

  double support_begin() const noexcept { return breakpoints_.front(); }
  double support_end() const noexcept { return breakpoints_.back(); }

  /// True when every piece has an all-zero (or empty) coefficient vector.
  bool is_zero() const noexcept;

  /// Highest coefficient index over all pieces; -1 for the zero function.
  int degree() const noexcept;

  double operator()(double x) const noexcept;

 private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> pieces_;
};

/// p(x). Zero outside the support; at an interior breakpoint the right piece
/// is used, at the final breakpoint the last piece.
double eval(const PiecewisePolynomial& p, double x) noexcept;

/// x -> p(x - c).
PiecewisePolynomial shift(const PiecewisePolynomial& p, double c);

/// Exact pointwise product, restricted to the intersection of supports.
/// Disjoint supports give the canonical zero function.
PiecewisePolynomial multiply(const PiecewisePolynomial& p, const PiecewisePolynomial& q);

/// alpha * p + beta * q over the union of both breakpoint sets.
PiecewisePolynomial linear_combination(double alpha, const PiecewisePolynomial& p, double beta,
                                       const PiecewisePolynomial& q);

/// Integral of p over R.
double integrate(const PiecewisePolynomial& p) noexcept;

/// Integral of p(x) cos(omega x) over R, in closed form piece by piece.
double integrate_poly_cos(const PiecewisePolynomial& p, double omega);

/// Absolute tolerance under which two breakpoints are treated as one.
inline constexpr double kBreakpointMergeTol = 1e-12;

namespace detail {

/// Re-expands sum c_m u^m (u = x - from) in powers of (x - to).
std::vector<double> recenter(std::span<const double> coeffs, double from, double to);

/// Evaluates sum c_m u^m by Horner's rule.
double horner(std::span<const double> coeffs, double u) noexcept;

}  // namespace detail

}  // namespace gabor
