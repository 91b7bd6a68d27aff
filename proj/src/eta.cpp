#include "etazeta/eta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "etazeta/coefficients.hpp"
#include "etazeta/errors.hpp"
#include "etazeta/gamma.hpp"
#include "etazeta/summation.hpp"

namespace etazeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// n^{-s} = e^{-sigma ln n} (cos(t ln n) - i sin(t ln n))
Complex power_neg(double log_n, const ComplexPoint& s) {
  const double mag = std::exp(-s.sigma * log_n);
  const double phase = s.t * log_n;
  return {mag * std::cos(phase), -mag * std::sin(phase)};
}

void check_direct_domain(const ComplexPoint& s) {
  if (!s.finite()) throw EvalError(ErrorKind::Domain, "evaluation point must be finite");
  if (s.sigma < kDirectSigmaMin || s.sigma > kDirectSigmaMax)
    throw EvalError(ErrorKind::Domain, "outside supported sigma range for direct evaluation");
}

void check_params(const EvalParams& params) {
  if (params.m < 1) throw std::invalid_argument("m must be >= 1");
  if (params.r_max < 1 || params.r_max >= kMaxSeriesDepth)
    throw std::invalid_argument("r_max must be in [1, " + std::to_string(kMaxSeriesDepth - 1) + "]");
}

// Terms p_r beta^{2r-1} prod_{k=0}^{2r-2} (s+k) of the bracket, r = 0..r_last.
// Term 0 is p_0.
std::vector<Complex> bracket_terms(const Complex& s, double beta, int r_last) {
  const auto& p = coefficient_table().p;
  std::vector<Complex> terms;
  terms.reserve(r_last + 1);
  terms.emplace_back(p[0]);
  Complex prod = s;
  double beta_pow = beta;
  for (int r = 1; r <= r_last; ++r) {
    if (r > 1) {
      prod *= (s + (2.0 * r - 3.0)) * (s + (2.0 * r - 2.0));
      beta_pow *= beta * beta;
    }
    terms.push_back(p[r] * beta_pow * prod);
  }
  return terms;
}

}  // namespace

EvalParams select_params(const ComplexPoint& s, double target_ratio) {
  check_direct_domain(s);
  if (!(target_ratio >= 1e-12 && target_ratio <= 1e-4))
    throw std::invalid_argument("target ratio must be in [1e-12, 1e-4]");
  for (int m : kParamSchedule) {
    EvalParams params;
    params.m = m;
    if (max_tail_ratio(s.sigma, s.t, params.b()) <= target_ratio) return params;
  }
  throw EvalError(ErrorKind::ParameterExhaustion,
                  "parameter exhaustion: no scheduled m reaches the tail ratio at t = " +
                      std::to_string(s.t));
}

Complex alternating_partial_sum(const ComplexPoint& s, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  ComplexNeumaierSum sum;
  for (int n = 1; n <= 2 * m; ++n) {
    const Complex term = power_neg(std::log(static_cast<double>(n)), s);
    sum.add(n % 2 == 1 ? term : -term);
  }
  return sum.value();
}

Complex correction_term(const ComplexPoint& s, const EvalParams& params) {
  check_params(params);
  const auto terms = bracket_terms(s.value(), params.beta(), params.r_max);
  // smallest terms first
  Complex bracket = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) bracket += *it;
  return power_neg(std::log(static_cast<double>(params.b())), s) * bracket;
}

ErrorBudget eta_error_budget(const ComplexPoint& s, const EvalParams& params) {
  check_params(params);
  const double b = params.b();
  const double log_b = std::log(b);
  const double scale = std::exp(-s.sigma * log_b);  // |b^{-s}|

  // One extra term: its magnitude estimates what the cut series leaves out.
  const auto terms = bracket_terms(s.value(), params.beta(), params.r_max + 1);

  ErrorBudget budget;
  budget.integral_tail = std::exp(-b);
  budget.series_truncation = 2.0 * scale * std::abs(terms.back());

  // Each kept term carries the relative error E(n,b)/|Gamma(n+s)| of its
  // gamma integral, n = 0 for p_0 and n = 2r-1 otherwise.
  const auto ratios = tail_ratio_report(s.sigma, s.t, b, 2 * params.r_max - 1);
  double dropped = 0.0;
  for (int r = 0; r <= params.r_max; ++r) {
    const int n = (r == 0) ? 0 : 2 * r - 1;
    dropped += std::abs(terms[r]) * ratios[n].ratio;
  }
  budget.dropped_gamma_tail = scale * dropped;

  // Each n^{-s} carries a phase error ~ eps |t| ln n on top of the usual few ulp.
  double weight = 0.0;
  for (int n = 1; n <= 2 * params.m; ++n) {
    const double log_n = std::log(static_cast<double>(n));
    weight += std::exp(-s.sigma * log_n) * (1.0 + std::abs(s.t) * log_n);
  }
  double bracket_mag = 0.0;
  for (int r = 0; r <= params.r_max; ++r) bracket_mag += std::abs(terms[r]);
  weight += scale * bracket_mag * (1.0 + std::abs(s.t) * log_b);
  budget.rounding = 4.0 * kEps * weight;

  budget.extrapolated = s.sigma > 1.0;
  budget.finalize();
  return budget;
}

EvalResult eta_raw(const ComplexPoint& s, const EvalParams& params) {
  check_direct_domain(s);
  check_params(params);
  EvalResult result;
  result.value = alternating_partial_sum(s, params.m) + correction_term(s, params);
  result.budget = eta_error_budget(s, params);
  result.method = MethodTag::Direct26;
  result.params = params;
  return result;
}

EvalResult eta_raw(const ComplexPoint& s) { return eta_raw(s, select_params(s)); }

}  // namespace etazeta
