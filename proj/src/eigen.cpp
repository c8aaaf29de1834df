#include "gaborgram/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "gaborgram/errors.hpp"

namespace gabor {

namespace {

struct JacobiResult {
  std::vector<double> values;  // unsorted diagonal
  RealMatrix vectors;          // columns, empty unless requested
  int sweeps = 0;
};

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += row[j] * row[j];
  }
  return std::sqrt(s);
}

JacobiResult jacobi(RealMatrix a, const EigenOptions& options) {
  const std::size_t n = a.rows();
  JacobiResult out;
  if (options.vectors) {
    out.vectors = RealMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, i) = 1.0;
  }
  const double scale = frobenius_norm(a);
  const double target = options.tol * scale;

  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    if (sweep >= options.max_sweeps)
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(options.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        if (apq == 0.0) continue;

        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          const double new_kp = c * akp - s * akq;
          const double new_kq = s * akp + c * akq;
          a(k, p) = a(p, k) = new_kp;
          a(k, q) = a(q, k) = new_kq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        if (options.vectors) {
          auto& v = out.vectors;
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  out.sweeps = sweep;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i);
  return out;
}

std::vector<std::size_t> sorted_order(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  return order;
}

// Up to five pair indices, chosen by a fixed-seed generator so reports are reproducible.
std::vector<std::size_t> sample_pairs(std::size_t count) {
  std::vector<std::size_t> picks(count);
  std::iota(picks.begin(), picks.end(), std::size_t{0});
  if (count <= 5) return picks;
  std::mt19937 rng(20240917u);
  std::shuffle(picks.begin(), picks.end(), rng);
  picks.resize(5);
  return picks;
}

template <class T>
double trace_residual(const Matrix<T>& m, const std::vector<double>& eigenvalues) {
  double tr = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) tr += std::real(m(i, i));
  const double fro2 = std::pow(frobenius_norm(m), 2);
  double s1 = 0.0, s2 = 0.0;
  for (double v : eigenvalues) {
    s1 += v;
    s2 += v * v;
  }
  const double scale = std::sqrt(fro2) * std::sqrt(static_cast<double>(m.rows()));
  const double r1 = std::abs(s1 - tr) / std::max(scale, 1e-300);
  const double r2 = std::abs(s2 - fro2) / std::max(fro2, 1e-300);
  return std::max(r1, r2);
}

}  // namespace

SpectrumReport symmetric_eigenvalues(const RealMatrix& m, const EigenOptions& options) {
  if (!m.square()) throw InvalidArgument("eigensolver needs a square matrix");
  const double scale = max_abs(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-10 * scale)
        throw InvalidArgument("matrix is not symmetric");

  SpectrumReport report;
  report.matrix_dim = m.rows();
  if (m.rows() == 0) return report;

  auto result = jacobi(m, options);
  report.sweeps = result.sweeps;
  const auto order = sorted_order(result.values);
  for (std::size_t i : order) report.eigenvalues.push_back(result.values[i]);

  if (options.vectors) {
    const double norm2 = std::max(std::abs(report.min()), std::abs(report.max()));
    const std::size_t n = m.rows();
    for (std::size_t pick : sample_pairs(n)) {
      const std::size_t col = order[pick];
      const double lambda = report.eigenvalues[pick];
      double r2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double mv = 0.0;
        for (std::size_t j = 0; j < n; ++j) mv += m(i, j) * result.vectors(j, col);
        r2 += std::pow(mv - lambda * result.vectors(i, col), 2);
      }
      report.residual = std::max(report.residual, std::sqrt(r2) / std::max(norm2, 1e-300));
    }
  } else {
    report.residual = trace_residual(m, report.eigenvalues);
  }
  return report;
}

SpectrumReport hermitian_eigenvalues(const ComplexMatrix& m, const EigenOptions& options) {
  if (!m.square()) throw InvalidArgument("eigensolver needs a square matrix");
  if (hermitian_deviation(m) > 1e-10 * max_abs(m)) throw InvalidArgument("matrix is not Hermitian");

  const std::size_t n = m.rows();
  SpectrumReport report;
  report.matrix_dim = n;
  if (n == 0) return report;

  RealMatrix embedded(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = m(i, j).real();
      const double im = m(i, j).imag();
      embedded(i, j) = re;
      embedded(i, n + j) = -im;
      embedded(n + i, j) = im;
      embedded(n + i, n + j) = re;
    }
  }
  // Symmetrize exactly; the Hermitian check above allows tiny asymmetry.
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = i + 1; j < 2 * n; ++j)
      embedded(i, j) = embedded(j, i) = 0.5 * (embedded(i, j) + embedded(j, i));

  auto result = jacobi(std::move(embedded), options);
  report.sweeps = result.sweeps;
  const auto order = sorted_order(result.values);

  report.eigenvalues.reserve(n);
  std::vector<std::size_t> representative;  // embedded column index per eigenvalue
  for (std::size_t i = 0; i < n; ++i) {
    const double lo = result.values[order[2 * i]];
    const double hi = result.values[order[2 * i + 1]];
    if (std::abs(hi - lo) > 1e-9 * (1.0 + std::abs(hi)))
      throw ConvergenceError("doubled spectrum of the real embedding failed to pair up");
    report.eigenvalues.push_back(0.5 * (lo + hi));
    representative.push_back(order[2 * i]);
  }

  if (options.vectors) {
    const double norm2 = std::max(std::abs(report.min()), std::abs(report.max()));
    for (std::size_t pick : sample_pairs(n)) {
      const std::size_t col = representative[pick];
      const double lambda = report.eigenvalues[pick];
      std::vector<Complex> z(n);
      double znorm = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = Complex(result.vectors(i, col), result.vectors(n + i, col));
        znorm += std::norm(z[i]);
      }
      double r2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex mz = 0.0;
        for (std::size_t j = 0; j < n; ++j) mz += m(i, j) * z[j];
        r2 += std::norm(mz - lambda * z[i]);
      }
      report.residual = std::max(report.residual, std::sqrt(r2 / znorm) / std::max(norm2, 1e-300));
    }
  } else {
    report.residual = trace_residual(m, report.eigenvalues);
  }
  return report;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  ComplexMatrix dilation(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      dilation(i, r + j) = m(i, j);
      dilation(r + j, i) = std::conj(m(i, j));
    }
  }
  auto spectrum = hermitian_eigenvalues(dilation);
  // Eigenvalues are +-sigma_i plus |r - c| zeros; the top min(r, c) are the singular values.
  const std::size_t k = std::min(r, c);
  std::vector<double> sigma(spectrum.eigenvalues.rbegin(),
                            spectrum.eigenvalues.rbegin() + static_cast<std::ptrdiff_t>(k));
  for (double& s : sigma) s = std::max(s, 0.0);
  return sigma;
}

}  // namespace gabor
