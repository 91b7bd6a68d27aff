#include "etazeta/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace etazeta {

namespace {

using boost::multiprecision::cpp_int;

void check_depth(int r_max) {
  if (r_max < 1 || r_max > kMaxSeriesDepth)
    throw std::invalid_argument("series depth must be in [1, " + std::to_string(kMaxSeriesDepth) +
                                "], got " + std::to_string(r_max));
}

// B_0 .. B_n (all indices, B_1 = -1/2).
std::vector<Rational> bernoulli_all(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int j = 1; j <= n; ++j) {
    // binom(j+1, k) built incrementally
    cpp_int binom = 1;
    Rational acc = 0;
    for (int k = 0; k < j; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (j + 1 - k) / (k + 1);
    }
    b[j] = -acc / (j + 1);
  }
  return b;
}

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Rational> bernoulli_exact(int r_max) {
  check_depth(r_max);
  const auto all = bernoulli_all(2 * r_max);
  std::vector<Rational> even;
  even.reserve(r_max);
  for (int r = 1; r <= r_max; ++r) even.push_back(all[2 * r]);
  return even;
}

std::vector<double> bernoulli_numbers(int r_max) {
  std::vector<double> out;
  for (const auto& b : bernoulli_exact(r_max)) out.push_back(b.convert_to<double>());
  return out;
}

std::vector<Rational> p_coefficients_exact(int r_max) {
  const auto b = bernoulli_exact(r_max);
  std::vector<Rational> p;
  p.reserve(r_max + 1);
  p.emplace_back(1, 2);
  for (int r = 1; r <= r_max; ++r) {
    const cpp_int pow4 = cpp_int(1) << (2 * r);
    p.push_back(Rational(pow4 - 1) * b[r - 1] / Rational(factorial(2 * r)));
  }
  return p;
}

CoefficientTable p_coefficients(int r_max) {
  CoefficientTable table;
  for (const auto& q : p_coefficients_exact(r_max)) table.p.push_back(q.convert_to<double>());
  table.bernoulli = bernoulli_numbers(r_max);
  return table;
}

const CoefficientTable& coefficient_table() {
  static const CoefficientTable table = p_coefficients(kMaxSeriesDepth);
  return table;
}

double p_coefficient_asymptotic(int r) {
  if (r < 1) throw std::invalid_argument("asymptotic coefficient index must be >= 1");
  const double magnitude = 2.0 / std::pow(std::numbers::pi, 2 * r);
  return (r % 2 == 1) ? magnitude : -magnitude;
}

Complex c_coefficient(int k, const Complex& s) {
  if (k < 1) throw std::invalid_argument("C_k requires k >= 1");
  // (2k+1)! 2^{2k} = prod_{r=0}^{2k-1} 2 (r+2), paired factor by factor with (s+r)
  Complex c = 1.0;
  for (int r = 0; r < 2 * k; ++r) c *= (s + static_cast<double>(r)) / (2.0 * (r + 2));
  return c;
}

}  // namespace etazeta
