#include "etazeta/zeta.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "etazeta/eta.hpp"
#include "etazeta/errors.hpp"
#include "etazeta/gamma.hpp"
#include "etazeta/summation.hpp"

namespace etazeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Spacing 2 pi / ln 2 of the exceptional points along sigma = 1.
constexpr double kExceptionalSpacing = 2.0 * kPi / kLn2;

constexpr int kInnerTerms = 2000;

// x^{-s} for real x > 0, written so that conj(s) gives exactly the conjugate.
Complex real_power_neg(double log_x, const Complex& s) {
  const double mag = std::exp(-s.real() * log_x);
  const double phase = s.imag() * log_x;
  return {mag * std::cos(phase), -mag * std::sin(phase)};
}

// x^{s} for real x > 0.
Complex real_power(double log_x, const Complex& s) {
  const double mag = std::exp(s.real() * log_x);
  const double phase = s.imag() * log_x;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

void check_supported(const ComplexPoint& s) {
  if (!s.finite()) throw EvalError(ErrorKind::Domain, "outside supported sigma range: non-finite input");
  if (s.sigma < kSupportedSigmaMin || s.sigma > kSupportedSigmaMax)
    throw EvalError(ErrorKind::Domain, "outside supported sigma range [-0.5, 3]");
}

bool is_one(const ComplexPoint& s) { return s.sigma == 1.0 && s.t == 0.0; }
bool is_zero(const ComplexPoint& s) { return s.sigma == 0.0 && s.t == 0.0; }

// Phase errors of order eps |t| log|t| from the gamma, sine and power factors.
double reflection_rounding(double t, double magnitude) {
  const double at = std::abs(t);
  return 32.0 * kEps * (1.0 + at * std::log(2.0 + at)) * magnitude;
}

ErrorBudget stepwise_budget(const ComplexPoint& s, const StepwiseResult& st) {
  ErrorBudget budget;
  budget.series_truncation = 2.0 * st.last_term + st.inner_tail;
  budget.rounding =
      4.0 * kEps * (std::abs(st.value) + st.abs_sum * (1.0 + std::abs(s.t) * std::log(kInnerTerms)));
  budget.extrapolated = true;
  budget.finalize();
  return budget;
}

// zeta(z) - 1 for Re(z) >= 2: Dirichlet sum to N with a two-term Euler-Maclaurin tail.
Complex zeta_minus_one(const Complex& z, const std::vector<double>& logs) {
  ComplexNeumaierSum sum;
  for (int n = 2; n <= kInnerTerms; ++n) sum.add(real_power_neg(logs[n], z));
  const double log_n = logs[kInnerTerms];
  const Complex n_pow = real_power_neg(log_n, z);  // N^{-z}
  sum.add(n_pow * static_cast<double>(kInnerTerms) / (z - 1.0));
  sum.add(-0.5 * n_pow);
  return sum.value();
}

}  // namespace

ExceptionalProximity exceptional_proximity(const ComplexPoint& s) {
  ExceptionalProximity out;
  const long n = std::lround(std::abs(s.t) / kExceptionalSpacing);
  out.nearest_n = static_cast<int>(std::max(1L, n));
  const double sign = s.t < 0.0 ? -1.0 : 1.0;
  out.distance = std::hypot(s.sigma - 1.0, s.t - sign * out.nearest_n * kExceptionalSpacing);
  return out;
}

Complex conversion_factor(const Complex& s) { return 1.0 - 2.0 * real_power_neg(kLn2, s); }

Complex eta_reflect_from_zeta(const Complex& zeta_s, const ComplexPoint& s) {
  if (is_one(s)) throw EvalError(ErrorKind::Pole, "pole at s=1 in the functional equation");
  const Complex z = s.value();
  const Complex one_minus_2s = 1.0 - real_power(kLn2, z);
  const Complex two_pi_s = real_power(std::log(2.0 * kPi), z);
  const Complex denom = gamma_reflected(1.0 - z) * sin_pi(0.5 * z) * two_pi_s;
  return kPi * zeta_s * one_minus_2s / denom;
}

Complex eta_functional_equation(const Complex& eta_s, const ComplexPoint& s) {
  if (is_one(s)) throw EvalError(ErrorKind::Pole, "pole at s=1 in the functional equation");
  const Complex den = conversion_factor(s.value());
  if (std::abs(den) < kIndeterminateThreshold)
    throw EvalError(ErrorKind::Indeterminate,
                    "indeterminate form: 1 - 2^(1-s) vanishes, use the stepwise path");
  return eta_reflect_from_zeta(eta_s / den, s);
}

StepwiseResult zeta_stepwise_detail(const ComplexPoint& s, int k_max, double tol) {
  if (is_one(s)) throw EvalError(ErrorKind::Pole, "pole at s=1");
  if (!s.finite()) throw EvalError(ErrorKind::Domain, "evaluation point must be finite");
  if (std::abs(s.t) > kStepwiseMaxAbsT)
    throw EvalError(ErrorKind::StepwiseRange,
                    "exceptional point requires stepwise path beyond |t|<=20");
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");

  std::vector<double> logs(kInnerTerms + 1, 0.0);
  for (int n = 1; n <= kInnerTerms; ++n) logs[n] = std::log(static_cast<double>(n));

  const Complex z = s.value();
  // 1 + (2/3)^{s-1} / (s-1)
  const Complex lead = 1.0 + real_power_neg(std::log(1.5), z - 1.0) / (z - 1.0);

  StepwiseResult out;
  ComplexNeumaierSum tail;
  Complex c = 1.0;
  int quiet = 0;
  for (int k = 1; k <= k_max; ++k) {
    // C_k = C_{k-1} (s+2k-2)(s+2k-1) / (2(2k) * 2(2k+1))
    c *= (z + (2.0 * k - 2.0)) / (4.0 * k);
    c *= (z + (2.0 * k - 1.0)) / (2.0 * (2.0 * k + 1.0));
    const Complex zk = z + 2.0 * k;
    const Complex term = c * zeta_minus_one(zk, logs);
    out.inner_tail += std::abs(c) * std::abs(zk) *
                      std::exp(-(zk.real() + 1.0) * logs[kInnerTerms]) / 12.0;
    tail.add(term);
    out.abs_sum += std::abs(term);
    out.terms = k;
    out.last_term = std::abs(term);

    const Complex current = lead - tail.value();
    if (std::abs(term) < tol * std::abs(current)) {
      if (++quiet == 2) {
        out.value = current;
        return out;
      }
    } else {
      quiet = 0;
    }
  }
  throw EvalError(ErrorKind::NonConvergent, "non-convergent tail in stepwise continuation");
}

Complex zeta_em_stepwise(const ComplexPoint& s, int k_max, double tol) {
  return zeta_stepwise_detail(s, k_max, tol).value;
}

EvalResult eta(const ComplexPoint& s, std::optional<int> m) {
  check_supported(s);

  EvalResult result;
  if (is_one(s) || is_zero(s)) {
    result.value = is_one(s) ? kLn2 : 0.5;
    result.method = MethodTag::SpecialValue;
    result.has_params = false;
    result.budget.finalize();
    return result;
  }

  if (s.sigma >= kDirectSigmaMin) {
    if (m) {
      EvalParams params;
      params.m = *m;
      return eta_raw(s, params);
    }
    return eta_raw(s);
  }

  // Evaluate at conj(1-s), which lies in the direct half-plane, then map back.
  const ComplexPoint reflected(1.0 - s.sigma, s.t);
  if (std::abs(conversion_factor(reflected.value())) < kIndeterminateThreshold) {
    const StepwiseResult st = zeta_stepwise_detail(reflected);
    const Complex factor = eta_reflect_from_zeta(1.0, reflected);
    result.value = std::conj(factor * st.value);
    result.budget = stepwise_budget(reflected, st).scaled(std::abs(factor));
    result.method = MethodTag::Stepwise3;
    result.has_params = false;
  } else {
    EvalParams params;
    if (m)
      params.m = *m;
    else
      params = select_params(reflected);
    const EvalResult inner = eta_raw(reflected, params);
    const Complex factor = eta_functional_equation(1.0, reflected);
    result.value = std::conj(factor * inner.value);
    result.budget = inner.budget.scaled(std::abs(factor));
    result.method = MethodTag::Reflection27;
    result.params = params;
  }
  result.budget.rounding += reflection_rounding(s.t, std::abs(result.value));
  result.budget.extrapolated = true;
  result.budget.finalize();
  return result;
}

EvalResult zeta(const ComplexPoint& s, std::optional<int> m) {
  check_supported(s);
  if (is_one(s)) throw EvalError(ErrorKind::Pole, "pole at s=1");

  EvalResult result;
  if (is_zero(s)) {
    result.value = -0.5;
    result.method = MethodTag::SpecialValue;
    result.has_params = false;
    result.budget.finalize();
    return result;
  }

  if (exceptional_proximity(s).distance >= kExceptionalDistance) {
    result = eta(s, m);
    const Complex den = conversion_factor(s.value());
    result.value /= den;
    result.budget = result.budget.scaled(1.0 / std::abs(den));
    result.budget.rounding += 4.0 * kEps * std::abs(result.value);
    result.budget.finalize();
    return result;
  }

  const StepwiseResult st = zeta_stepwise_detail(s);
  result.value = st.value;
  result.budget = stepwise_budget(s, st);
  result.method = MethodTag::Stepwise3;
  result.has_params = false;
  return result;
}

}  // namespace etazeta
