#ifndef ETAZETA_GAMMA_HPP
#define ETAZETA_GAMMA_HPP

#include <vector>

#include "etazeta/types.hpp"

namespace etazeta {

/// Principal branch of log Gamma(z) for Re(z) > 0. Throws EvalError(Domain)
/// otherwise; reflect first.
Complex log_gamma(const Complex& z);

/// Gamma(z) on the whole plane except the poles 0, -1, -2, ...
/// Uses the reflection formula for Re(z) < 1/2.
Complex gamma_reflected(const Complex& z);

/// sin(pi z), with the real part reduced exactly before scaling by pi.
Complex sin_pi(const Complex& z);

/// Leading-order Stirling estimate of |Gamma(x + i t)|, x >= 1/2.
/// Only used for tail ratios, never for returned values.
double stirling_magnitude(double x, double t);

/// E(n, b) = e^{-b} n! sum_{k=0}^{n} b^k / k!  =  int_b^inf y^n e^{-y} dy.
double gamma_tail_bound(int n, double b);

struct TailRatioReport {
  int n = 0;
  double b = 0.0;
  double e_nb = 0.0;       // E(n, b)
  double gamma_mag = 0.0;  // Stirling |Gamma(n + sigma + i t)|
  double ratio = 0.0;      // e_nb / gamma_mag
};

inline constexpr int kTailOrderMax = 13;

/// One row per n = 0..n_max comparing the dropped tail with |Gamma(n+sigma+it)|.
std::vector<TailRatioReport> tail_ratio_report(double sigma, double t, double b,
                                               int n_max = kTailOrderMax);

/// max over n = 0..n_max of the report ratios.
double max_tail_ratio(double sigma, double t, double b, int n_max = kTailOrderMax);

}  // namespace etazeta

#endif  // ETAZETA_GAMMA_HPP
