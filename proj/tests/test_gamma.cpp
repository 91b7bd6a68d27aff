#include <doctest.h>

#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>

#include "etazeta/errors.hpp"
#include "etazeta/gamma.hpp"

using namespace etazeta;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(const Complex& a, const Complex& b) { return std::abs(a - b) / std::abs(b); }

// int_b^inf y^n e^{-y} dy by double-exponential quadrature on y = b + u.
double tail_by_quadrature(int n, double b) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [n, b](double u) { return std::exp(n * std::log(b + u) - u); };
  return std::exp(-b) * integrator.integrate(f, 1e-14);
}

}  // namespace

TEST_CASE("log_gamma at simple real points") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-13);
  CHECK(log_gamma(5.0).real() == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(0.5).real() == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  CHECK(log_gamma(5.0).imag() == 0.0);
}

TEST_CASE("log_gamma agrees with std::lgamma on the positive axis") {
  for (double x = 0.05; x <= 60.0; x += 0.37) {
    const Complex lg = log_gamma(x);
    CHECK(std::abs(lg.real() - std::lgamma(x)) <= 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("log_gamma principal branch against 30-digit references") {
  struct Ref {
    double x, y, re, im;
  };
  constexpr std::array<Ref, 6> refs = {{
      {0.5, 100, -156.16069414628498918, 360.51743526790643592},
      {3, 120, -175.60771773460882433, 458.40030724062669756},
      {60, 1, 184.52542609340068008, 4.0860351517263437558},
      {0.1, 0.1, 1.8989912736759001615, -0.82746470777307574554},
      {0.25, -45, -70.718557936685801847, -125.90734444111425922},
      {12.5, 7.25, 16.662064881435571558, 18.416821207682597137},
  }};
  for (const auto& r : refs) {
    CAPTURE(r.x);
    CAPTURE(r.y);
    CHECK(rel(log_gamma({r.x, r.y}), {r.re, r.im}) < 1e-13);
  }
}

TEST_CASE("log_gamma rejects Re(z) <= 0") {
  CHECK_THROWS_AS(log_gamma(0.0), EvalError);
  CHECK_THROWS_AS(log_gamma({-0.5, 3.0}), EvalError);
}

TEST_CASE("|Gamma(1+it)| and |Gamma(1/2+it)| closed forms") {
  for (double t = 0.25; t <= 60.0; t += 0.25) {
    const double g1 = std::abs(std::exp(log_gamma({1.0, t})));
    CHECK(std::abs(g1 / std::sqrt(kPi * t / std::sinh(kPi * t)) - 1.0) < 1e-12);
    const double gh = std::abs(gamma_reflected({0.5, t}));
    CHECK(std::abs(gh * gh / (kPi / std::cosh(kPi * t)) - 1.0) < 1e-12);
  }
}

TEST_CASE("Gamma recurrence on a grid") {
  for (double x = 0.5; x <= 10.0; x += 0.5) {
    for (double y = -60.0; y <= 60.0; y += 7.5) {
      const Complex z(x, y);
      CHECK(rel(gamma_reflected(z + 1.0), z * gamma_reflected(z)) < 1e-12);
    }
  }
}

TEST_CASE("gamma values, reflection and poles") {
  CHECK(gamma_reflected(4.0).real() == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(gamma_reflected(-0.5).real() == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-14));
  CHECK(std::abs(gamma_reflected(-0.5).imag()) < 1e-15);
  // reflection branch also satisfies the recurrence
  for (double x = -0.5; x < 0.5; x += 0.125) {
    const Complex z(x, 3.5);
    CHECK(rel(gamma_reflected(z + 1.0), z * gamma_reflected(z)) < 1e-12);
  }
  CHECK_THROWS_AS(gamma_reflected(0.0), EvalError);
  CHECK_THROWS_AS(gamma_reflected(-3.0), EvalError);
  try {
    gamma_reflected(-2.0);
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
  CHECK_THROWS_AS(gamma_reflected(200.0), EvalError);
}

TEST_CASE("sin_pi is exact at integers and conjugation symmetric") {
  CHECK(sin_pi(3.0) == Complex(0.0, 0.0));
  CHECK(std::abs(sin_pi(-0.5).real() + 1.0) < 1e-16);
  const Complex z(0.3, 2.1);
  CHECK(sin_pi(std::conj(z)) == std::conj(sin_pi(z)));
  CHECK(rel(sin_pi(z), std::sin(kPi * z)) < 1e-14);
}

TEST_CASE("Stirling magnitude estimate") {
  // leading order: about 2% low at x = 4
  CHECK(stirling_magnitude(4.0, 0.0) == doctest::Approx(5.8765).epsilon(1e-4));
  CHECK(std::abs(stirling_magnitude(14.0, 0.0) / 6227020800.0 - 1.0) < 0.01);
  double previous = 1.0;
  for (double t = 0.5; t <= 60.0; t += 0.5) {
    const double g = stirling_magnitude(1.0, t);
    CHECK(g > 0.0);
    CHECK(g < previous);
    previous = g;
  }
  CHECK(stirling_magnitude(1.0, 10.0) < 1.0);
  CHECK(stirling_magnitude(2.0, 5.0) == stirling_magnitude(2.0, -5.0));
  CHECK_THROWS_AS(stirling_magnitude(0.25, 0.0), std::invalid_argument);
}

TEST_CASE("E(n, b) examples") {
  CHECK(gamma_tail_bound(0, 81.0) == doctest::Approx(std::exp(-81.0)).epsilon(1e-14));
  CHECK(gamma_tail_bound(0, 81.0) < 7e-36);
  CHECK(gamma_tail_bound(0, 1.0) == doctest::Approx(0.36787944117144233).epsilon(1e-14));
  CHECK(gamma_tail_bound(1, 2.0) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-14));
  CHECK(gamma_tail_bound(1, 2.0) == doctest::Approx(0.406006).epsilon(1e-6));
  CHECK_THROWS_AS(gamma_tail_bound(14, 81.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_tail_bound(3, 0.0), std::invalid_argument);
}

TEST_CASE("E(n, b) equals quadrature of the tail integral") {
  for (int n = 0; n <= 13; ++n) {
    for (double b : {1.0, 5.0, 21.0, 41.0, 81.0, 101.0, 121.0}) {
      CAPTURE(n);
      CAPTURE(b);
      const double closed = gamma_tail_bound(n, b);
      CHECK(std::abs(closed / tail_by_quadrature(n, b) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("E(n, b) decreases strictly in b") {
  for (int n = 0; n <= 13; ++n) {
    double previous = INFINITY;
    for (double b = 1.0; b <= 301.0; b += 10.0) {
      const double e = gamma_tail_bound(n, b);
      CHECK(e > 0.0);
      CHECK(e < previous);
      previous = e;
    }
  }
}

TEST_CASE("tail ratio reports reproduce the parameter criteria") {
  for (const auto& row : tail_ratio_report(1.0, 40.0, 81.0)) CHECK(row.ratio < 1e-5);
  for (const auto& row : tail_ratio_report(1.0, 50.0, 101.0)) CHECK(row.ratio < 1e-7);
  CHECK(max_tail_ratio(1.0, 40.0, 81.0) < 1e-5);
  CHECK(max_tail_ratio(1.0, 50.0, 101.0) < 1e-7);

  const auto rows = tail_ratio_report(1.0, 0.0, 81.0);
  REQUIRE(rows.size() == 14);
  // gamma_mag is the Stirling estimate, sqrt(2 pi)/e at x = 1 instead of Gamma(1) = 1
  CHECK(rows[0].ratio == doctest::Approx(std::exp(-81.0) / stirling_magnitude(1.0, 0.0)));
  CHECK(std::abs(rows[0].ratio / std::exp(-81.0) - 1.0) < 0.09);
  for (const auto& row : rows) {
    CHECK(row.e_nb > 0.0);
    CHECK(row.gamma_mag > 0.0);
    CHECK(row.ratio > 0.0);
    CHECK(row.b == 81.0);
  }
}
