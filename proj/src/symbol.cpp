#include "gaborgram/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gaborgram/errors.hpp"

namespace gabor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double int_pow(double x, int n) noexcept {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

LaurentSymbol make_symbol(const GaborParams& params, int ell) {
  params.validate();
  return {params, ell, toeplitz_block(params, ell)};
}

LaurentSymbol symbol_from_coeffs(std::vector<double> coeffs, int ell) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  LaurentSymbol sym;
  sym.ell = ell;
  sym.block.ell = ell;
  sym.block.bandwidth = static_cast<int>(coeffs.size()) - 1;
  sym.block.coeffs = std::move(coeffs);
  return sym;
}

double eval_symbol_coeff(const LaurentSymbol& sym, double x) noexcept {
  const auto& c = sym.block.coeffs;
  double sum = 0.0;
  // Smallest terms first.
  for (std::size_t k = c.size(); k-- > 1;)
    sum += 2.0 * c[k] * std::cos(kTwoPi * static_cast<double>(k) * x);
  return sum + c[0];
}

double eval_symbol_derivative(const LaurentSymbol& sym, double x) noexcept {
  const auto& c = sym.block.coeffs;
  double sum = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const auto kk = static_cast<double>(k);
    sum -= 2.0 * kTwoPi * kk * c[k] * std::sin(kTwoPi * kk * x);
  }
  return sum;
}

std::int64_t sinc_truncation_radius(const GaborParams& params, int ell, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("sinc-sum tolerance must be positive");
  const double ab = params.a * params.b;
  const double shift = std::ceil(0.5 * ab * std::abs(ell));
  const double tail = std::ceil(params.a * std::pow(2.0 / tol, 1.0 / (2.0 * params.order - 1.0)));
  const double r = std::max(shift + tail, 8.0);
  if (!(r < static_cast<double>(kMaxSincRadius))) return kMaxSincRadius;
  return static_cast<std::int64_t>(r);
}

double eval_symbol_sinc(const LaurentSymbol& sym, double x, double tol) {
  const auto& p = sym.params;
  const std::int64_t radius = sinc_truncation_radius(p, sym.ell, tol);
  const double half_shift = 0.5 * p.a * p.b * sym.ell;
  const double lo_center = x - half_shift;
  const double hi_center = x + half_shift;
  const auto center = static_cast<std::int64_t>(std::llround(x));

  // Accumulate outward from the center so the dominant terms are added first
  // into separate partial sums per side, then combine smallest-first.
  auto term = [&](std::int64_t r) {
    const auto rr = static_cast<double>(r);
    return int_pow(sinc((rr - lo_center) / p.a), p.order) *
           int_pow(sinc((rr - hi_center) / p.a), p.order);
  };
  double right = 0.0;
  for (std::int64_t r = center + radius; r > center; --r) right += term(r);
  double left = 0.0;
  for (std::int64_t r = center - radius; r < center; ++r) left += term(r);
  return (term(center) + left + right) / p.a;
}

SymbolExtrema symbol_extrema(const LaurentSymbol& sym, int grid) {
  if (grid < 64) throw InvalidArgument("extrema search needs grid >= 64");

  SymbolExtrema ext{std::numeric_limits<double>::infinity(), 0.0,
                    -std::numeric_limits<double>::infinity(), 0.0};
  auto consider = [&](double x) {
    const double v = eval_symbol_coeff(sym, x);
    if (v < ext.min) ext = {v, x, ext.max, ext.argmax};
    if (v > ext.max) ext = {ext.min, ext.argmin, v, x};
  };

  const double step = 1.0 / grid;
  double x_prev = -0.5;
  double d_prev = eval_symbol_derivative(sym, x_prev);
  consider(x_prev);
  for (int i = 1; i <= grid; ++i) {
    const double x = -0.5 + i * step;
    const double d = eval_symbol_derivative(sym, x);
    consider(x);
    if ((d_prev < 0.0 && d > 0.0) || (d_prev > 0.0 && d < 0.0)) {
      double lo = x_prev, hi = x, d_lo = d_prev;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double d_mid = eval_symbol_derivative(sym, mid);
        if (d_mid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((d_mid < 0.0) == (d_lo < 0.0)) {
          lo = mid;
          d_lo = d_mid;
        } else {
          hi = mid;
        }
      }
      consider(0.5 * (lo + hi));
    }
    x_prev = x;
    d_prev = d;
  }
  return ext;
}

double spectral_width(const GaborParams& params, int ell, int grid) {
  return symbol_extrema(make_symbol(params, ell), grid).width();
}

DecayFit fit_power_law(std::vector<int> ells, std::vector<double> widths) {
  DecayFit fit{std::move(ells), std::move(widths), 0.0, 0.0};
  const std::size_t n = fit.ells.size();
  if (n < 2 || n != fit.widths.size())
    throw InvalidArgument("power-law fit needs at least two matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(fit.widths[i] > 0.0) || fit.ells[i] <= 0)
      throw InvalidArgument("power-law fit needs positive ell and width");
    const double lx = std::log(static_cast<double>(fit.ells[i]));
    const double ly = std::log(fit.widths[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto dn = static_cast<double>(n);
  fit.slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / dn;
  return fit;
}

DecayFit decay_fit(const GaborParams& params, int first, int last, int grid) {
  if (first < 1 || last <= first)
    throw InvalidArgument("decay fit needs 1 <= first < last, got " + std::to_string(first) + ".." +
                          std::to_string(last));
  params.validate();
  std::vector<int> ells;
  std::vector<double> widths;
  for (int ell = first; ell <= last; ++ell) {
    ells.push_back(ell);
    widths.push_back(spectral_width(params, ell, grid));
  }
  return fit_power_law(std::move(ells), std::move(widths));
}

}  // namespace gabor
