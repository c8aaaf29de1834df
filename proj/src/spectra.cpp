#include "gaborgram/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gaborgram/errors.hpp"

namespace gabor {

namespace {

void require_wrappable(const LaurentSymbol& sym, int n) {
  if (n <= 2 * sym.block.bandwidth)
    throw InvalidArgument("circulant wrapping needs n > 2 * bandwidth (n=" + std::to_string(n) +
                          ", bandwidth=" + std::to_string(sym.block.bandwidth) + ")");
}

std::vector<double> wrapped_row(const LaurentSymbol& sym, int n) {
  const int m = sym.block.bandwidth;
  std::vector<double> row(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k <= m; ++k) row[static_cast<std::size_t>(k)] = sym.block[-k];
  for (int k = n - m; k <= n - 1; ++k) row[static_cast<std::size_t>(k)] = sym.block[n - k];
  return row;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

CirculantSpectrum circulant_from_symbol(const LaurentSymbol& sym, int n) {
  require_wrappable(sym, n);
  CirculantSpectrum out;
  out.first_row = wrapped_row(sym, n);
  const auto un = static_cast<std::size_t>(n);
  out.eigenvalues.resize(un);
  for (std::size_t p = 0; p < un; ++p)
    out.eigenvalues[p] = eval_symbol_coeff(sym, static_cast<double>(p) / n);

  std::vector<Complex> roots(un);
  for (std::size_t j = 0; j < un; ++j)
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / n);
  std::vector<std::size_t> band;
  for (std::size_t d = 0; d < un; ++d)
    if (out.first_row[d] != 0.0) band.push_back(d);

  double scale = 1.0;
  for (double v : out.eigenvalues) scale = std::max(scale, 1.0 + std::abs(v));
  for (std::size_t p = 0; p < un; ++p) {
    for (std::size_t i = 0; i < un; ++i) {
      Complex cf = 0.0;
      for (std::size_t d : band) cf += out.first_row[d] * roots[(p * ((i + d) % un)) % un];
      const Complex fi = roots[(p * i) % un];
      out.fourier_check = std::max(out.fourier_check, std::abs(cf - out.eigenvalues[p] * fi));
    }
  }
  if (out.fourier_check > 1e-10 * scale)
    throw ConvergenceError("circulant Fourier-vector check failed");
  return out;
}

RealMatrix circulant_matrix(const std::vector<double>& first_row) {
  const std::size_t n = first_row.size();
  RealMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = first_row[(j + n - i) % n];
  return c;
}

double asymptotic_equivalence_gap(const LaurentSymbol& sym, int n) {
  require_wrappable(sym, n);
  const auto row = wrapped_row(sym, n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double t = sym.block[i - j];
      const double c = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
      sum += (t - c) * (t - c);
    }
  }
  return std::sqrt(sum / n);
}

std::vector<EigenComparison> eigen_comparison_trace(const LaurentSymbol& sym,
                                                    const std::vector<int>& n_list) {
  std::vector<EigenComparison> trace;
  for (int n : n_list) {
    require_wrappable(sym, n);
    EigenComparison cmp;
    cmp.n = n;
    cmp.toeplitz = symmetric_eigenvalues(toeplitz_matrix(sym.block, n)).eigenvalues;
    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      samples[static_cast<std::size_t>(p)] = eval_symbol_coeff(sym, static_cast<double>(p) / n);
    cmp.circulant = sorted(std::move(samples));
    for (std::size_t m = 0; m < cmp.toeplitz.size(); ++m) {
      const double lam = cmp.toeplitz[m];
      const double psi = cmp.circulant[m];
      cmp.moment1 += lam - psi;
      cmp.moment2 += lam * lam - psi * psi;
      cmp.mean_abs_diff += std::abs(lam - psi);
    }
    cmp.moment1 /= n;
    cmp.moment2 /= n;
    cmp.mean_abs_diff /= n;
    trace.push_back(std::move(cmp));
  }
  return trace;
}

double symbol_average(const LaurentSymbol& sym, const std::function<double(double)>& f,
                      int panels) {
  if (panels < 2 || panels % 2 != 0)
    throw InvalidArgument("Simpson rule needs an even number of panels");
  const double h = 1.0 / panels;
  double sum = f(eval_symbol_coeff(sym, 0.0)) + f(eval_symbol_coeff(sym, 1.0));
  for (int i = 1; i < panels; ++i)
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(eval_symbol_coeff(sym, i * h));
  return (sum * h) / 3.0;
}

SzegoResult szego_check(const LaurentSymbol& sym, int n, const std::function<double(double)>& f) {
  if (n < 1) throw InvalidArgument("Szego statistic needs n >= 1");
  const auto eig = symmetric_eigenvalues(toeplitz_matrix(sym.block, n));
  SzegoResult out;
  for (double lam : eig.eigenvalues) out.lhs += f(lam);
  out.lhs /= n;
  out.rhs = symbol_average(sym, f);
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

InterlacingReport interlacing_check(const GaborConfig& config) {
  config.validate();
  if (config.n > kMaxFullGramN)
    throw InvalidArgument("full Gram eigensolves are capped at n <= " +
                          std::to_string(kMaxFullGramN));
  const auto gram = assemble_gram(config);
  const auto full = hermitian_eigenvalues(gram.entries);
  const auto block = hermitian_eigenvalues(gram_block(gram, 0, 0));

  InterlacingReport report;
  report.config = config;
  report.gram_eigenvalues = full.eigenvalues;
  report.block0_eigenvalues = block.eigenvalues;
  report.residual = std::max(full.residual, block.residual);

  const std::size_t n = static_cast<std::size_t>(config.n);
  const std::size_t offset = n * n - n;
  report.all_hold = true;
  for (std::size_t k = 0; k < n; ++k) {
    const bool ok = full.eigenvalues[k] <= block.eigenvalues[k] + kInterlacingSlack &&
                    block.eigenvalues[k] <= full.eigenvalues[k + offset] + kInterlacingSlack;
    report.inequality_holds.push_back(ok);
    report.all_hold = report.all_hold && ok;
  }

  report.symbol = symbol_extrema(make_symbol(config.params, 0));
  report.lower_estimate = full.min() <= report.symbol.min + kInterlacingSlack;
  report.upper_estimate = report.symbol.max <= full.max() + kInterlacingSlack;
  return report;
}

std::optional<int> estimate_threshold(const std::vector<InterlacingReport>& reports) {
  std::optional<int> threshold;
  for (auto it = reports.rbegin(); it != reports.rend(); ++it) {
    if (!(it->lower_estimate && it->upper_estimate)) break;
    threshold = it->config.n;
  }
  return threshold;
}

std::optional<int> rational_lattice_p(double a) {
  if (!(a > 0.0)) return std::nullopt;
  const double inv = 1.0 / a;
  const double p = std::round(inv);
  if (p >= 2.0 && std::abs(inv - p) <= 1e-12 * p) return static_cast<int>(p);
  return std::nullopt;
}

FrameBoundTrace frame_bound_trace(const GaborParams& params, const std::vector<int>& n_list) {
  params.validate();
  if (n_list.empty()) throw InvalidArgument("frame-bound trace needs at least one n");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    const int n = n_list[i];
    if (n < 3 || n % 2 == 0 || n > kMaxFullGramN)
      throw InvalidArgument("frame-bound trace needs odd 3 <= n <= " +
                            std::to_string(kMaxFullGramN) + ", got " + std::to_string(n));
    if (i > 0 && n <= n_list[i - 1]) throw InvalidArgument("n-list must be strictly ascending");
  }

  FrameBoundTrace trace;
  trace.params = params;
  trace.ns = n_list;
  for (int n : n_list) {
    const auto eig = hermitian_eigenvalues(assemble_gram({params, n}).entries);
    trace.lower.push_back(eig.min());
    trace.upper.push_back(eig.max());
  }

  trace.lower_nonincreasing = true;
  trace.upper_nondecreasing = true;
  trace.numerically_invertible = true;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (i > 0) {
      trace.lower_nonincreasing =
          trace.lower_nonincreasing && trace.lower[i] <= trace.lower[i - 1] + kInterlacingSlack;
      trace.upper_nondecreasing =
          trace.upper_nondecreasing && trace.upper[i] >= trace.upper[i - 1] - kInterlacingSlack;
    }
    trace.numerically_invertible =
        trace.numerically_invertible && trace.lower[i] > 1e-10 * trace.upper[i];
  }

  trace.rational_p = rational_lattice_p(params.a);
  if (trace.rational_p)
    trace.rational_degeneration = trace.lower_nonincreasing && trace.lower.size() > 1 &&
                                  trace.lower.back() < trace.lower.front();
  return trace;
}

}  // namespace gabor
