#include "etazeta/gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "etazeta/errors.hpp"
#include "etazeta/summation.hpp"

namespace etazeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi) / 2

// The Stirling series is used once |z| >= this.
constexpr double kStirlingRadius = 17.0;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

Complex stirling_log_gamma(const Complex& w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  // Horner in 1/w^2, highest order first
  Complex series = 0.0;
  for (auto it = kStirlingCoeffs.rbegin(); it != kStirlingCoeffs.rend(); ++it)
    series = series * inv2 + *it;
  series *= inv;
  return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series;
}

double sinpi(double x) {
  double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(kPi * r);
}

double cospi(double x) { return sinpi(0.5 - std::abs(std::remainder(x, 2.0))); }

bool is_nonpositive_integer(const Complex& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Complex sin_pi(const Complex& z) {
  const double y = kPi * z.imag();
  return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

Complex log_gamma(const Complex& z) {
  if (!(z.real() > 0.0))
    throw EvalError(ErrorKind::Domain, "log_gamma requires Re(z) > 0");
  if (std::abs(z) >= kStirlingRadius) return stirling_log_gamma(z);

  // log Gamma(z) = log Gamma(z+N) - sum_{k<N} log(z+k); every log(z+k) is
  // principal with Re(z+k) > 0, so the branches line up.
  const int shift = static_cast<int>(std::ceil(kStirlingRadius - z.real()));
  ComplexNeumaierSum logs;
  for (int k = 0; k < shift; ++k) logs.add(std::log(z + static_cast<double>(k)));
  return stirling_log_gamma(z + static_cast<double>(shift)) - logs.value();
}

Complex gamma_reflected(const Complex& z) {
  if (is_nonpositive_integer(z)) throw EvalError(ErrorKind::Pole, "Gamma pole at non-positive integer");

  constexpr double kMaxLog = 709.78;
  if (z.real() >= 0.5) {
    const Complex lg = log_gamma(z);
    if (lg.real() > kMaxLog) throw EvalError(ErrorKind::Overflow, "|Gamma(z)| exceeds double range");
    return std::exp(lg);
  }
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const Complex lg = log_gamma(1.0 - z);
  const Complex s = sin_pi(z);
  const double log_mag = std::log(kPi) - std::log(std::abs(s)) - lg.real();
  if (log_mag > kMaxLog || !std::isfinite(std::abs(s)))
    throw EvalError(ErrorKind::Overflow, "|Gamma(z)| exceeds double range");
  return kPi / (s * std::exp(lg));
}

double stirling_magnitude(double x, double t) {
  if (!(x >= 0.5)) throw std::invalid_argument("stirling_magnitude requires x >= 1/2");
  // (x^2+t^2)^{(2x-1)/4} = |z|^{x-1/2}
  const double log_mag = kHalfLog2Pi - x + 0.25 * (2.0 * x - 1.0) * std::log(x * x + t * t) -
                         t * std::atan(t / x);
  return std::exp(log_mag);
}

double gamma_tail_bound(int n, double b) {
  if (n < 0 || n > kTailOrderMax) throw std::invalid_argument("gamma_tail_bound order must be in [0, 13]");
  if (!(b > 0.0)) throw std::invalid_argument("gamma_tail_bound requires b > 0");

  std::array<double, kTailOrderMax + 1> terms{};
  terms[0] = 1.0;
  for (int k = 1; k <= n; ++k) terms[k] = terms[k - 1] * b / k;
  std::sort(terms.begin(), terms.begin() + n + 1);  // smallest first
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += terms[k];

  const double log_factorial = std::lgamma(n + 1.0);
  return std::exp(-b + log_factorial + std::log(sum));
}

std::vector<TailRatioReport> tail_ratio_report(double sigma, double t, double b, int n_max) {
  if (n_max < 0 || n_max > kTailOrderMax) throw std::invalid_argument("n_max must be in [0, 13]");
  std::vector<TailRatioReport> rows;
  rows.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    TailRatioReport row;
    row.n = n;
    row.b = b;
    row.e_nb = gamma_tail_bound(n, b);
    row.gamma_mag = stirling_magnitude(n + sigma, t);
    row.ratio = row.e_nb / row.gamma_mag;
    rows.push_back(row);
  }
  return rows;
}

double max_tail_ratio(double sigma, double t, double b, int n_max) {
  double worst = 0.0;
  for (const auto& row : tail_ratio_report(sigma, t, b, n_max)) worst = std::max(worst, row.ratio);
  return worst;
}

}  // namespace etazeta
