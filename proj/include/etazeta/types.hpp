#ifndef ETAZETA_TYPES_HPP
#define ETAZETA_TYPES_HPP

#include <complex>
#include <string_view>

namespace etazeta {

using Complex = std::complex<double>;

/// An evaluation point s = sigma + i t.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {}
  explicit ComplexPoint(const Complex& z) : sigma(z.real()), t(z.imag()) {}

  Complex value() const { return {sigma, t}; }
  constexpr ComplexPoint conj() const { return {sigma, -t}; }
  bool finite() const;

  friend constexpr bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

/// Method parameters. The number of directly summed terms is 2m; b = 2m+1.
struct EvalParams {
  static constexpr int kSeriesDepth = 7;

  int m = 40;
  int r_max = kSeriesDepth;

  constexpr int b() const { return 2 * m + 1; }
  constexpr double beta() const { return 1.0 / b(); }
};

/// A-priori error estimate for one evaluation, split by source.
struct ErrorBudget {
  double integral_tail = 0.0;       // kernel tail beyond y = b
  double series_truncation = 0.0;   // odd power series cut after r_max terms
  double dropped_gamma_tail = 0.0;  // gamma integrals extended from [0,b] to [0,inf)
  double rounding = 0.0;            // floating-point accumulation
  double total = 0.0;
  bool extrapolated = false;  // sigma outside [1/2, 1], where the analysis was done

  void finalize() { total = integral_tail + series_truncation + dropped_gamma_tail + rounding; }
  ErrorBudget scaled(double factor) const;
};

enum class MethodTag { Direct26, Reflection27, SpecialValue, Stepwise3 };

std::string_view to_string(MethodTag tag);

struct EvalResult {
  Complex value;
  ErrorBudget budget;
  MethodTag method = MethodTag::Direct26;
  EvalParams params;
  bool has_params = true;  // false for SpecialValue / Stepwise3
};

}  // namespace etazeta

#endif  // ETAZETA_TYPES_HPP
