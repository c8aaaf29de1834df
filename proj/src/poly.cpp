#include "gaborgram/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gaborgram/errors.hpp"

namespace gabor {

namespace {

using Complex = std::complex<double>;

// Sorted union of breakpoints lying in [lo, hi], with near-coincident points merged.
std::vector<double> merged_breakpoints(const std::vector<double>& a, const std::vector<double>& b,
                                       double lo, double hi) {
  std::vector<double> all;
  all.reserve(a.size() + b.size() + 2);
  all.push_back(lo);
  all.push_back(hi);
  for (double x : a)
    if (x > lo && x < hi) all.push_back(x);
  for (double x : b)
    if (x > lo && x < hi) all.push_back(x);
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double x : all) {
    if (!out.empty() && x - out.back() <= kBreakpointMergeTol) continue;
    out.push_back(x);
  }
  // The upper end must survive the merge even when an interior point sits within tol of it.
  if (out.back() != hi) out.back() = hi;
  return out;
}

// Index of the piece whose interval contains x, or -1 if x is outside the support.
int locate(const PiecewisePolynomial& p, double x) {
  const auto& bp = p.breakpoints();
  if (x < bp.front() || x > bp.back()) return -1;
  auto it = std::upper_bound(bp.begin(), bp.end(), x);
  auto idx = static_cast<int>(it - bp.begin()) - 1;
  return std::min(idx, static_cast<int>(p.piece_count()) - 1);
}

// Coefficients of p on [u, v] (centered at u); empty when [u, v] is outside p's support.
std::vector<double> piece_on(const PiecewisePolynomial& p, double u, double v) {
  int idx = locate(p, 0.5 * (u + v));
  if (idx < 0) return {};
  const auto& c = p.pieces()[static_cast<std::size_t>(idx)];
  return detail::recenter(c, p.breakpoints()[static_cast<std::size_t>(idx)], u);
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Moments K_m = int_0^1 t^m e^{i theta t} dt for m = 0..degree, theta >= 0.
//
// theta < 1: power series in theta. Otherwise the upward recurrence
//   K_m = (e^{i theta} - m K_{m-1}) / (i theta)
// is used for m <= theta, where it does not amplify error, and the downward
// recurrence K_{m-1} = (e^{i theta} - i theta K_m) / m for m > theta, seeded
// at a high index M >= 2 theta from the expansion of K_M about t = 1.
std::vector<Complex> cos_moments(int degree, double theta) {
  const auto count = static_cast<std::size_t>(degree + 1);
  std::vector<Complex> k(count);
  const Complex i_theta(0.0, theta);

  if (theta < 1.0) {
    for (int m = 0; m <= degree; ++m) {
      Complex sum = 0.0;
      Complex power = 1.0;  // (i theta)^j / j!
      for (int j = 0; j < 60; ++j) {
        Complex term = power / static_cast<double>(m + j + 1);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        power *= i_theta / static_cast<double>(j + 1);
      }
      k[static_cast<std::size_t>(m)] = sum;
    }
    return k;
  }

  const Complex e = std::polar(1.0, theta);
  const int upward_top = std::min(degree, static_cast<int>(std::floor(theta)));
  k[0] = (e - 1.0) / i_theta;
  for (int m = 1; m <= upward_top; ++m)
    k[static_cast<std::size_t>(m)] =
        (e - static_cast<double>(m) * k[static_cast<std::size_t>(m - 1)]) / i_theta;

  if (degree > upward_top) {
    const int top = std::max(degree, static_cast<int>(std::ceil(2.0 * theta)) + 1);
    // K_top = e^{i theta} * sum_j (-i theta)^j top! / (top + j + 1)!
    Complex sum = 0.0;
    Complex term = 1.0 / static_cast<double>(top + 1);
    for (int j = 0; j < 200; ++j) {
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      term *= -i_theta / static_cast<double>(top + j + 2);
    }
    Complex current = e * sum;
    for (int m = top; m > upward_top; --m) {
      if (m <= degree) k[static_cast<std::size_t>(m)] = current;
      current = (e - i_theta * current) / static_cast<double>(m);
    }
  }
  return k;
}

}  // namespace

namespace detail {

std::vector<double> recenter(std::span<const double> coeffs, double from, double to) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  const double d = to - from;
  if (d == 0.0 || c.size() < 2) return c;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += d * c[j + 1];
  return c;
}

double horner(std::span<const double> coeffs, double u) noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

}  // namespace detail

PiecewisePolynomial::PiecewisePolynomial() : breakpoints_{0.0, 1.0}, pieces_(1) {}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints,
                                         std::vector<std::vector<double>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2)
    throw InvalidArgument("piecewise polynomial needs at least two breakpoints");
  if (pieces_.size() != breakpoints_.size() - 1)
    throw InvalidArgument("piecewise polynomial needs one piece per interval");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw InvalidArgument("breakpoints must be strictly increasing");
}

bool PiecewisePolynomial::is_zero() const noexcept {
  for (const auto& piece : pieces_)
    for (double c : piece)
      if (c != 0.0) return false;
  return true;
}

int PiecewisePolynomial::degree() const noexcept {
  int deg = -1;
  for (const auto& piece : pieces_)
    for (std::size_t m = 0; m < piece.size(); ++m)
      if (piece[m] != 0.0) deg = std::max(deg, static_cast<int>(m));
  return deg;
}

double PiecewisePolynomial::operator()(double x) const noexcept { return eval(*this, x); }

double eval(const PiecewisePolynomial& p, double x) noexcept {
  int idx = locate(p, x);
  if (idx < 0) return 0.0;
  const auto i = static_cast<std::size_t>(idx);
  return detail::horner(p.pieces()[i], x - p.breakpoints()[i]);
}

PiecewisePolynomial shift(const PiecewisePolynomial& p, double c) {
  if (p.is_zero()) return PiecewisePolynomial::zero();
  std::vector<double> bp = p.breakpoints();
  for (double& x : bp) x += c;
  return {std::move(bp), p.pieces()};
}

PiecewisePolynomial multiply(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  if (p.is_zero() || q.is_zero()) return PiecewisePolynomial::zero();
  const double lo = std::max(p.support_begin(), q.support_begin());
  const double hi = std::min(p.support_end(), q.support_end());
  if (hi - lo <= kBreakpointMergeTol) return PiecewisePolynomial::zero();

  auto bp = merged_breakpoints(p.breakpoints(), q.breakpoints(), lo, hi);
  std::vector<std::vector<double>> pieces;
  pieces.reserve(bp.size() - 1);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i)
    pieces.push_back(convolve(piece_on(p, bp[i], bp[i + 1]), piece_on(q, bp[i], bp[i + 1])));
  return {std::move(bp), std::move(pieces)};
}

PiecewisePolynomial linear_combination(double alpha, const PiecewisePolynomial& p, double beta,
                                       const PiecewisePolynomial& q) {
  const bool p_zero = p.is_zero() || alpha == 0.0;
  const bool q_zero = q.is_zero() || beta == 0.0;
  if (p_zero && q_zero) return PiecewisePolynomial::zero();

  const double lo = p_zero   ? q.support_begin()
                    : q_zero ? p.support_begin()
                             : std::min(p.support_begin(), q.support_begin());
  const double hi = p_zero   ? q.support_end()
                    : q_zero ? p.support_end()
                             : std::max(p.support_end(), q.support_end());

  static const std::vector<double> none;
  auto bp =
      merged_breakpoints(p_zero ? none : p.breakpoints(), q_zero ? none : q.breakpoints(), lo, hi);
  std::vector<std::vector<double>> pieces;
  pieces.reserve(bp.size() - 1);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    auto a = p_zero ? std::vector<double>{} : piece_on(p, bp[i], bp[i + 1]);
    auto b = q_zero ? std::vector<double>{} : piece_on(q, bp[i], bp[i + 1]);
    std::vector<double> sum(std::max(a.size(), b.size()), 0.0);
    for (std::size_t m = 0; m < a.size(); ++m) sum[m] += alpha * a[m];
    for (std::size_t m = 0; m < b.size(); ++m) sum[m] += beta * b[m];
    pieces.push_back(std::move(sum));
  }
  return {std::move(bp), std::move(pieces)};
}

double integrate(const PiecewisePolynomial& p) noexcept {
  double total = 0.0;
  const auto& bp = p.breakpoints();
  for (std::size_t i = 0; i < p.piece_count(); ++i) {
    const double h = bp[i + 1] - bp[i];
    double hp = h;
    for (std::size_t m = 0; m < p.pieces()[i].size(); ++m) {
      total += p.pieces()[i][m] * hp / static_cast<double>(m + 1);
      hp *= h;
    }
  }
  return total;
}

double integrate_poly_cos(const PiecewisePolynomial& p, double omega) {
  if (omega == 0.0) return integrate(p);
  omega = std::abs(omega);  // cos is even

  double total = 0.0;
  const auto& bp = p.breakpoints();
  for (std::size_t i = 0; i < p.piece_count(); ++i) {
    const auto& c = p.pieces()[i];
    if (c.empty()) continue;
    const double left = bp[i];
    const double h = bp[i + 1] - left;
    const auto moments = cos_moments(static_cast<int>(c.size()) - 1, omega * h);
    Complex acc = 0.0;
    double hp = h;
    for (std::size_t m = 0; m < c.size(); ++m) {
      acc += c[m] * hp * moments[m];
      hp *= h;
    }
    total += (std::polar(1.0, omega * left) * acc).real();
  }
  return total;
}

}  // namespace gabor
