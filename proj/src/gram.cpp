#include "gaborgram/gram.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaborgram/errors.hpp"

namespace gabor {

namespace {

constexpr double kPi = std::numbers::pi;

void check_ell(const GaborConfig& config, int ell) {
  if (ell <= -config.n || ell >= config.n)
    throw InvalidArgument("modulation difference |ell| must be < n, got ell=" +
                          std::to_string(ell) + " with n=" + std::to_string(config.n));
}

double coeff_from_window(const GaborParams& params, const PiecewisePolynomial& window, int ell,
                         int j) {
  const double half_shift = 0.5 * params.a * j;
  const auto product = multiply(shift(window, half_shift), shift(window, -half_shift));
  return integrate_poly_cos(product, 2.0 * kPi * params.b * ell);
}

}  // namespace

int GaborParams::bandwidth() const { return static_cast<int>(std::floor(order / a)); }

void GaborParams::validate() const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidArgument("lattice steps a and b must be positive and finite");
  if (!(a * b < 1.0)) throw InvalidArgument("lattice must satisfy ab < 1");
  if (order < 1 || order > kMaxBSplineOrder)
    throw InvalidArgument("B-spline order must be in [1, " + std::to_string(kMaxBSplineOrder) +
                          "]");
}

void GaborConfig::validate() const {
  params.validate();
  if (n < 3 || n % 2 == 0) throw InvalidArgument("truncation size n must be odd and >= 3");
}

bool GaborConfig::strictly_banded() const { return n > params.order / params.a + 1.0; }

double toeplitz_coeff(const GaborParams& params, int ell, int j) {
  if (std::abs(j) > params.bandwidth()) return 0.0;
  const auto window = build_bspline(params.order);
  return coeff_from_window(params, window.poly, ell, j);
}

ToeplitzBlock toeplitz_block(const GaborParams& params, int ell) {
  const auto window = build_bspline(params.order);
  ToeplitzBlock block{ell, params.bandwidth(), {}};
  block.coeffs.resize(static_cast<std::size_t>(block.bandwidth + 1));
  for (int j = 0; j <= block.bandwidth; ++j)
    block.coeffs[static_cast<std::size_t>(j)] = coeff_from_window(params, window.poly, ell, j);
  return block;
}

ComplexMatrix build_block(const GaborConfig& config, const ToeplitzBlock& block) {
  check_ell(config, block.ell);
  const int n = config.n;
  const int h = config.half();
  const double rate = kPi * config.params.a * config.params.b * block.ell;
  ComplexMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = -h; k <= h; ++k) {
    for (int kp = -h; kp <= h; ++kp) {
      const double t = block[k - kp];
      if (t == 0.0) continue;
      out(static_cast<std::size_t>(k + h), static_cast<std::size_t>(kp + h)) =
          t * std::polar(1.0, rate * (k + kp));
    }
  }
  return out;
}

ComplexMatrix build_block(const GaborConfig& config, int ell) {
  check_ell(config, ell);
  return build_block(config, toeplitz_block(config.params, ell));
}

GramMatrix assemble_gram(const GaborConfig& config) {
  config.validate();
  const int n = config.n;
  const auto un = static_cast<std::size_t>(n);

  // Coefficients depend on |ell| only (cos is even); compute them once before assembly.
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(2 * n - 1));
  std::vector<ToeplitzBlock> coeffs;
  for (int ell = 0; ell < n; ++ell) coeffs.push_back(toeplitz_block(config.params, ell));
  for (int ell = -(n - 1); ell <= n - 1; ++ell) {
    ToeplitzBlock block = coeffs[static_cast<std::size_t>(std::abs(ell))];
    block.ell = ell;
    blocks.push_back(build_block(config, block));
  }

  GramMatrix gram{config, ComplexMatrix(un * un, un * un)};
  for (std::size_t j = 0; j < un; ++j) {
    for (std::size_t jp = 0; jp < un; ++jp) {
      const auto ell = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(jp);
      const auto& block = blocks[static_cast<std::size_t>(ell + n - 1)];
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t kp = 0; kp < un; ++kp)
          gram.entries(j * un + k, jp * un + kp) = block(k, kp);
    }
  }
  return gram;
}

RealMatrix toeplitz_matrix(const ToeplitzBlock& block, int n) {
  const auto un = static_cast<std::size_t>(n);
  RealMatrix out(un, un);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = block[i - j];
  return out;
}

RealMatrix BlockFactors::toeplitz_matrix() const {
  return gabor::toeplitz_matrix(toeplitz, static_cast<int>(phase.size()));
}

ComplexMatrix BlockFactors::hankel_matrix() const {
  const std::size_t n = phase.size();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = phase[i] * phase[j];
  return out;
}

ComplexMatrix BlockFactors::hadamard_product() const {
  const auto t = toeplitz_matrix();
  auto h = hankel_matrix();
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) *= t(i, j);
  return h;
}

ComplexMatrix BlockFactors::diagonal_similarity() const {
  const auto t = toeplitz_matrix();
  const std::size_t n = phase.size();
  ComplexMatrix out(n, n);
  // D T D: scale rows by v_i, then columns by v_j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (phase[i] * t(i, j)) * phase[j];
  return out;
}

BlockFactors extract_factors(const GaborConfig& config, int ell) {
  check_ell(config, ell);
  BlockFactors factors{toeplitz_block(config.params, ell), {}};
  const int h = config.half();
  const double rate = kPi * config.params.a * config.params.b * ell;
  factors.phase.reserve(static_cast<std::size_t>(config.n));
  for (int k = -h; k <= h; ++k) factors.phase.push_back(std::polar(1.0, rate * k));
  return factors;
}

GramFactors assemble_factors(const GaborConfig& config) {
  config.validate();
  const auto un = static_cast<std::size_t>(config.n);
  GramFactors out{RealMatrix(un * un, un * un), ComplexMatrix(un * un, un * un)};
  for (int ell = -(config.n - 1); ell <= config.n - 1; ++ell) {
    const auto factors = extract_factors(config, ell);
    const auto t = factors.toeplitz_matrix();
    const auto h = factors.hankel_matrix();
    for (std::size_t j = 0; j < un; ++j) {
      const auto signed_jp = static_cast<std::ptrdiff_t>(j) - ell;
      if (signed_jp < 0 || signed_jp >= static_cast<std::ptrdiff_t>(un)) continue;
      const auto jp = static_cast<std::size_t>(signed_jp);
      for (std::size_t k = 0; k < un; ++k) {
        for (std::size_t kp = 0; kp < un; ++kp) {
          out.toeplitz(j * un + k, jp * un + kp) = t(k, kp);
          out.hankel(j * un + k, jp * un + kp) = h(k, kp);
        }
      }
    }
  }
  return out;
}

ComplexMatrix apply_lattice_shift(const GaborConfig& config, double s, double /*t*/) {
  auto gram = assemble_gram(config);
  const auto un = static_cast<std::size_t>(config.n);
  const double turns = config.params.a * config.params.b * s;
  auto& m = gram.entries;
  for (std::size_t j = 0; j < un; ++j) {
    for (std::size_t jp = 0; jp < un; ++jp) {
      // Whole turns are removed first so an integral shift is the identity bit for bit.
      const double cycles = turns * (static_cast<double>(j) - static_cast<double>(jp));
      const Complex phase = std::polar(1.0, 2.0 * kPi * (cycles - std::round(cycles)));
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t kp = 0; kp < un; ++kp) m(j * un + k, jp * un + kp) *= phase;
    }
  }
  return std::move(gram.entries);
}

double check_per_hermitian(const GaborConfig& config, int ell) {
  const auto block = build_block(config, ell);
  const int n = config.n;
  double worst = 0.0;
  // Reversal on I_n maps array index i to n - 1 - i.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(
          worst,
          std::abs(
              std::conj(block(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) -
              block(static_cast<std::size_t>(n - 1 - j), static_cast<std::size_t>(n - 1 - i))));
  return worst;
}

double per_hermitian_deviation(const GramMatrix& gram) {
  const int h = gram.config.half();
  const auto& m = gram.entries;
  double worst = 0.0;
  for (int j = -h; j <= h; ++j)
    for (int k = -h; k <= h; ++k)
      for (int jp = -h; jp <= h; ++jp)
        for (int kp = -h; kp <= h; ++kp)
          worst = std::max(worst, std::abs(std::conj(m(gram.index(j, k), gram.index(jp, kp))) -
                                           m(gram.index(-jp, -kp), gram.index(-j, -k))));
  return worst;
}

ComplexMatrix gram_block(const GramMatrix& gram, int j, int jp) {
  const auto un = static_cast<std::size_t>(gram.config.n);
  const int h = gram.config.half();
  const auto r0 = static_cast<std::size_t>(j + h) * un;
  const auto c0 = static_cast<std::size_t>(jp + h) * un;
  ComplexMatrix out(un, un);
  for (std::size_t k = 0; k < un; ++k)
    for (std::size_t kp = 0; kp < un; ++kp) out(k, kp) = gram.entries(r0 + k, c0 + kp);
  return out;
}

double block_toeplitz_deviation(const GramMatrix& gram) {
  const int h = gram.config.half();
  double worst = 0.0;
  for (int j = -h; j < h; ++j)
    for (int jp = -h; jp < h; ++jp)
      worst =
          std::max(worst, max_abs_diff(gram_block(gram, j, jp), gram_block(gram, j + 1, jp + 1)));
  return worst;
}

}  // namespace gabor
