#include "gaborgram/bspline.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gaborgram/errors.hpp"

namespace gabor {

namespace {

std::vector<double> unit_knots(int order) {
  std::vector<double> knots(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) knots[static_cast<std::size_t>(i)] = -0.5 * order + i;
  return knots;
}

// Piece i of s_N on [-N/2 + i, -N/2 + i + 1] is F_i(u) - F_{i-1}(u), where
// F_i(u) = (mass of s_{N-1} left of its interval i) + int_0^u piece_i.
BSpline convolve_up(const BSpline& prev) {
  const int order = prev.order + 1;
  const auto& prev_pieces = prev.poly.pieces();
  const std::size_t prev_count = prev_pieces.size();

  // Cumulative antiderivatives of each piece of s_{N-1}, centered at the piece's left knot.
  std::vector<std::vector<double>> antideriv(prev_count);
  double mass = 0.0;
  for (std::size_t i = 0; i < prev_count; ++i) {
    const auto& c = prev_pieces[i];
    std::vector<double> f(c.size() + 1, 0.0);
    f[0] = mass;
    for (std::size_t m = 0; m < c.size(); ++m) f[m + 1] = c[m] / static_cast<double>(m + 1);
    mass = detail::horner(f, 1.0);
    antideriv[i] = std::move(f);
  }

  auto cumulative = [&](std::ptrdiff_t i) -> std::vector<double> {
    if (i < 0) return {0.0};
    if (static_cast<std::size_t>(i) >= prev_count) return {mass};
    return antideriv[static_cast<std::size_t>(i)];
  };

  std::vector<std::vector<double>> pieces(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    auto upper = cumulative(i);
    auto lower = cumulative(i - 1);
    std::vector<double> diff(std::max(upper.size(), lower.size()), 0.0);
    for (std::size_t m = 0; m < upper.size(); ++m) diff[m] += upper[m];
    for (std::size_t m = 0; m < lower.size(); ++m) diff[m] -= lower[m];
    pieces[static_cast<std::size_t>(i)] = std::move(diff);
  }
  return {order, PiecewisePolynomial(unit_knots(order), std::move(pieces))};
}

BSpline indicator() { return {1, PiecewisePolynomial({-0.5, 0.5}, {{1.0}})}; }

BSpline truncated_power(int order) {
  const int deg = order - 1;
  // Binomial coefficients and 1/(N-1)!.
  std::vector<double> binom_n(static_cast<std::size_t>(order + 1), 1.0);
  for (int k = 1; k <= order; ++k)
    binom_n[static_cast<std::size_t>(k)] =
        binom_n[static_cast<std::size_t>(k - 1)] * (order - k + 1) / k;
  std::vector<double> binom_d(static_cast<std::size_t>(deg + 1), 1.0);
  for (int k = 1; k <= deg; ++k)
    binom_d[static_cast<std::size_t>(k)] =
        binom_d[static_cast<std::size_t>(k - 1)] * (deg - k + 1) / k;
  double inv_fact = 1.0;
  for (int k = 2; k <= deg; ++k) inv_fact /= k;

  std::vector<std::vector<double>> pieces(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    // On interval i (u = x + N/2 - i in [0,1]) the active terms are k <= i,
    // each contributing (u + i - k)^{deg} expanded in powers of u.
    std::vector<double> c(static_cast<std::size_t>(deg + 1), 0.0);
    for (int k = 0; k <= i; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double w = sign * binom_n[static_cast<std::size_t>(k)] * inv_fact;
      const double offset = i - k;
      double off_pow = 1.0;  // offset^{deg - m}, built from m = deg downward
      for (int m = deg; m >= 0; --m) {
        c[static_cast<std::size_t>(m)] += w * binom_d[static_cast<std::size_t>(m)] * off_pow;
        off_pow *= offset;
      }
    }
    pieces[static_cast<std::size_t>(i)] = std::move(c);
  }
  return {order, PiecewisePolynomial(unit_knots(order), std::move(pieces))};
}

}  // namespace

BSpline build_bspline(int order, BSplineConstruction method) {
  if (order < 1 || order > kMaxBSplineOrder)
    throw InvalidArgument("B-spline order must be in [1, " + std::to_string(kMaxBSplineOrder) +
                          "], got " + std::to_string(order));
  if (method == BSplineConstruction::kTruncatedPower) return truncated_power(order);

  BSpline s = indicator();
  while (s.order < order) s = convolve_up(s);
  return s;
}

double sinc(double x) noexcept {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

double fourier_sinc(int order, double xi) noexcept { return std::pow(sinc(xi), order); }

}  // namespace gabor
