#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gaborgram/bspline.hpp"
#include "gaborgram/errors.hpp"
#include "gaborgram/poly.hpp"
#include "oracles.hpp"

using namespace gabor;

namespace {

constexpr double kPi = std::numbers::pi;

const PiecewisePolynomial& s1() {
  static const auto p = build_bspline(1).poly;
  return p;
}
const PiecewisePolynomial& s2() {
  static const auto p = build_bspline(2).poly;
  return p;
}

// Random piecewise polynomial with its own pointwise evaluator, so the oracle
// never calls into PiecewisePolynomial.
struct RandomPoly {
  std::vector<double> bp;
  std::vector<std::vector<double>> pieces;

  double operator()(double x) const {
    if (x < bp.front() || x > bp.back()) return 0.0;
    std::size_t i = 0;
    while (i + 2 < bp.size() && x >= bp[i + 1]) ++i;
    double v = 0.0;
    for (std::size_t m = 0; m < pieces[i].size(); ++m) v += pieces[i][m] * std::pow(x - bp[i], m);
    return v;
  }
  PiecewisePolynomial poly() const { return {bp, pieces}; }
};

RandomPoly random_poly(std::mt19937& rng, int max_degree = 6) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> start(-3.0, 1.0);
  std::uniform_real_distribution<double> width(0.05, 1.2);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> degree(0, max_degree);
  RandomPoly p;
  p.bp.push_back(start(rng));
  const int pieces = count(rng);
  for (int i = 0; i < pieces; ++i) {
    p.bp.push_back(p.bp.back() + width(rng));
    std::vector<double> c(static_cast<std::size_t>(degree(rng) + 1));
    for (double& v : c) v = coeff(rng);
    p.pieces.push_back(std::move(c));
  }
  return p;
}

}  // namespace

TEST_CASE("eval of low-order B-splines") {
  CHECK(eval(s1(), 0.0) == 1.0);
  CHECK(eval(s1(), 0.75) == 0.0);
  CHECK(eval(s1(), -0.75) == 0.0);

  // s_3(0) = (s_1 * s_2)(0), by trapezoid with step 1e-5 on the independent evaluator.
  const double conv =
      oracle::trapezoid([](double y) { return oracle::bspline(1, y) * oracle::bspline(2, -y); },
                        -0.5 + 1e-12, 0.5 - 1e-12, 1e-5);
  CHECK(conv == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(eval(build_bspline(3).poly, 0.0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("eval picks the right piece at an interior breakpoint") {
  PiecewisePolynomial step({0.0, 1.0, 2.0}, {{1.0}, {5.0}});
  CHECK(eval(step, 1.0) == 5.0);
  CHECK(eval(step, 2.0) == 5.0);
  CHECK(eval(step, 0.0) == 1.0);
  CHECK(eval(step, 2.0 + 1e-15) == 0.0);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(PiecewisePolynomial({0.0}, {}), InvalidArgument);
  CHECK_THROWS_AS(PiecewisePolynomial({0.0, 1.0}, {{1.0}, {2.0}}), InvalidArgument);
  CHECK_THROWS_AS(PiecewisePolynomial({0.0, 0.0}, {{1.0}}), InvalidArgument);
  CHECK_THROWS_AS(PiecewisePolynomial({1.0, 0.0}, {{1.0}}), InvalidArgument);
}

TEST_CASE("shift translates the support") {
  const auto shifted = shift(s1(), 0.5);
  CHECK(shifted.support_begin() == 0.0);
  CHECK(shifted.support_end() == 1.0);
  CHECK(eval(shift(s2(), 1.0), 1.0) == doctest::Approx(1.0));
  CHECK(eval(shift(s2(), 0.3), 0.3) == doctest::Approx(eval(s2(), 0.0)).epsilon(1e-15));
  CHECK(shift(PiecewisePolynomial::zero(), 3.0).is_zero());
}

TEST_CASE("multiply") {
  SUBCASE("indicator squared") {
    const auto sq = multiply(s1(), s1());
    CHECK(sq.breakpoints() == s1().breakpoints());
    for (double x : {-0.6, -0.5, -0.2, 0.0, 0.3, 0.5, 0.6}) CHECK(eval(sq, x) == eval(s1(), x));
  }
  SUBCASE("disjoint supports give the canonical zero") {
    const auto z = multiply(shift(s1(), 2.0), s1());
    CHECK(z.is_zero());
    CHECK(z.breakpoints() == std::vector<double>{0.0, 1.0});
    CHECK(z.degree() == -1);
    CHECK(integrate_poly_cos(z, 3.0) == 0.0);
  }
  SUBCASE("touching supports are disjoint") { CHECK(multiply(shift(s1(), 1.0), s1()).is_zero()); }
  SUBCASE("hat squared integrates to 2/3") {
    const double expected = oracle::integrate(
        [](double x) { return (1.0 - std::abs(x)) * (1.0 - std::abs(x)); }, -1.0, 1.0, {0.0});
    CHECK(expected == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(integrate(multiply(s2(), s2())) == doctest::Approx(expected).epsilon(1e-14));
  }
  SUBCASE("degree adds and values match pointwise") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = random_poly(rng), q = random_poly(rng);
      const auto pq = multiply(p.poly(), q.poly());
      CHECK(pq.degree() <= std::max(0, p.poly().degree() + q.poly().degree()));
      for (int i = 0; i < 50; ++i) {
        const double x = -3.5 + 0.11 * i + 0.0037;
        CHECK(eval(pq, x) == doctest::Approx(p(x) * q(x)).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("near-coincident breakpoints are merged") {
  PiecewisePolynomial p({0.0, 1.0, 2.0}, {{1.0}, {1.0}});
  PiecewisePolynomial q({0.5, 1.0 + 1e-14, 3.0}, {{2.0}, {3.0}});
  const auto pq = multiply(p, q);
  CHECK(pq.breakpoints().size() == 3);
  CHECK(pq.breakpoints().front() == 0.5);
  CHECK(pq.breakpoints().back() == 2.0);
}

TEST_CASE("integrate_poly_cos closed-form values") {
  CHECK(integrate_poly_cos(s1(), 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(integrate_poly_cos(s1(), 2.0 * kPi)) < 1e-15);

  const double omega = 2.0 * kPi * 1.7 * 3.0;
  const double expected = oracle::integrate(
      [&](double x) { return oracle::bspline(2, x) * std::cos(omega * x); }, -1.0, 1.0, {0.0});
  CHECK(std::abs(integrate_poly_cos(s2(), omega) - expected) <= 1e-12);
  // Closed form of the hat's transform: sinc^2(omega / 2 pi).
  CHECK(std::abs(expected - fourier_sinc(2, 1.7 * 3.0)) <= 1e-12);
}

TEST_CASE("integrate_poly_cos agrees with composite quadrature on random inputs") {
  std::mt19937 rng(20250101);
  std::uniform_real_distribution<double> omega_dist(-200.0, 200.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(rng);
    const double omega = omega_dist(rng);
    const double max_panel = std::min(0.25, 2.0 / std::abs(omega));
    const double expected = oracle::integrate([&](double x) { return p(x) * std::cos(omega * x); },
                                              p.bp.front(), p.bp.back(), p.bp, max_panel);
    worst = std::max(worst, std::abs(integrate_poly_cos(p.poly(), omega) - expected));
  }
  CHECK(worst <= 1e-11);
}

TEST_CASE("integrate_poly_cos is linear") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> scalar(-2.0, 2.0);
  std::uniform_real_distribution<double> omega_dist(0.0, 60.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly(rng).poly();
    const auto q = random_poly(rng).poly();
    const double alpha = scalar(rng), beta = scalar(rng), omega = omega_dist(rng);
    const double combined = integrate_poly_cos(linear_combination(alpha, p, beta, q), omega);
    const double separate =
        alpha * integrate_poly_cos(p, omega) + beta * integrate_poly_cos(q, omega);
    const double scale = std::abs(alpha * integrate_poly_cos(p, omega)) +
                         std::abs(beta * integrate_poly_cos(q, omega)) + 1e-300;
    CHECK(std::abs(combined - separate) <= 1e-13 * std::max(scale, 1.0));
  }
}

TEST_CASE("small omega is continuous with the omega = 0 branch") {
  // Even polynomial pieces: s_4 and a symmetric random-coefficient window.
  for (const auto& p : {build_bspline(4).poly, multiply(s2(), shift(s2(), 0.0))}) {
    const double at_zero = integrate_poly_cos(p, 0.0);
    double second_moment = 0.0;  // int x^2 p(x) dx bounds the omega^2 term
    second_moment = oracle::integrate([&](double x) { return x * x * std::abs(eval(p, x)); },
                                      p.support_begin(), p.support_end(), p.breakpoints());
    for (double omega : {1e-3, 1e-4, 1e-5}) {
      const double diff = std::abs(integrate_poly_cos(p, omega) - at_zero);
      CHECK(diff <= 0.5 * second_moment * omega * omega * (1.0 + 1e-6) + 1e-16);
    }
  }
}

TEST_CASE("moments stay accurate across the branch switch") {
  // A single monomial piece u^m on [0, h]: compare around omega*h == 1 and omega*h == degree.
  for (int m = 0; m <= 10; ++m) {
    std::vector<double> c(static_cast<std::size_t>(m + 1), 0.0);
    c.back() = 1.0;
    PiecewisePolynomial p({0.3, 1.3}, {c});
    for (double omega : {0.999, 1.0, 1.001, 5.0, 9.999, 10.0, 10.001, 37.0}) {
      const double expected = oracle::integrate(
          [&](double x) { return std::pow(x - 0.3, m) * std::cos(omega * x); }, 0.3, 1.3, {}, 0.05);
      CHECK(std::abs(integrate_poly_cos(p, omega) - expected) <= 1e-14);
    }
  }
}

TEST_CASE("recenter is a Taylor shift") {
  const std::vector<double> c{1.0, -2.0, 0.5, 3.0};
  const auto shifted = detail::recenter(c, 0.0, 0.7);
  for (double x : {-1.0, 0.0, 0.4, 2.0})
    CHECK(detail::horner(shifted, x - 0.7) == doctest::Approx(detail::horner(c, x)).epsilon(1e-14));
}
