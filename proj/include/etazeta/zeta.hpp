#ifndef ETAZETA_ZETA_HPP
#define ETAZETA_ZETA_HPP

#include <optional>

#include "etazeta/types.hpp"

namespace etazeta {

inline constexpr double kSupportedSigmaMin = -0.5;
inline constexpr double kSupportedSigmaMax = 3.0;

/// Below this distance from 1 +- 2 pi n i / ln 2, zeta switches to the stepwise path.
inline constexpr double kExceptionalDistance = 1e-4;

/// Below this |1 - 2^{1-s}| the eta functional equation is treated as 0/0.
inline constexpr double kIndeterminateThreshold = 1e-4;

inline constexpr double kStepwiseMaxAbsT = 20.0;
inline constexpr int kStepwiseDefaultKMax = 30;
inline constexpr double kStepwiseDefaultTol = 1e-15;

struct ExceptionalProximity {
  int nearest_n = 1;
  double distance = 0.0;
};

/// Nearest zero 1 +- 2 pi n i / ln 2 (n >= 1) of eta that is not a zero of zeta.
ExceptionalProximity exceptional_proximity(const ComplexPoint& s);

/// 1 - 2^{1-s}
Complex conversion_factor(const Complex& s);

/// eta(1-s) from eta(s):
///   pi eta(s) (1-2^s) / [Gamma(1-s) sin(pi s/2) (2 pi)^s (1-2^{1-s})].
/// Throws EvalError(Pole) at s = 1 and EvalError(Indeterminate) when
/// |1 - 2^{1-s}| < kIndeterminateThreshold.
Complex eta_functional_equation(const Complex& eta_s, const ComplexPoint& s);

/// Same relation with zeta(s) = eta(s) / (1 - 2^{1-s}) already formed, so no 0/0.
Complex eta_reflect_from_zeta(const Complex& zeta_s, const ComplexPoint& s);

struct StepwiseResult {
  Complex value;
  int terms = 0;
  double last_term = 0.0;
  double abs_sum = 0.0;     // sum of |term|, for the rounding estimate
  double inner_tail = 0.0;  // sum_k |C_k| |z_k| N^{-Re z_k - 1} / 12, next Euler-Maclaurin term
};

/// zeta(s) = 1 + (2/3)^{s-1}/(s-1) - sum_{k>=1} C_k(s) [zeta(s+2k) - 1].
/// Inner zeta(s+2k) by a 2000-term Dirichlet sum with a two-term Euler-Maclaurin tail.
/// Stops when |term| < tol |sum| on two consecutive k.
/// Throws EvalError(Pole) at s = 1, EvalError(StepwiseRange) for |t| > 20 and
/// EvalError(NonConvergent) when k_max is reached first.
StepwiseResult zeta_stepwise_detail(const ComplexPoint& s, int k_max = kStepwiseDefaultKMax,
                                    double tol = kStepwiseDefaultTol);

Complex zeta_em_stepwise(const ComplexPoint& s, int k_max = kStepwiseDefaultKMax,
                         double tol = kStepwiseDefaultTol);

/// eta(s) for -1/2 <= sigma <= 3.
///  - s = 0, s = 1: closed-form special values.
///  - sigma >= 1/2: direct evaluation, params from select_params unless m is given.
///  - sigma < 1/2: eta at conj(1-s), mapped back by the functional equation and
///    conjugated. Where that functional equation is 0/0 the zeta value at
///    conj(1-s) comes from the stepwise path instead.
EvalResult eta(const ComplexPoint& s, std::optional<int> m = std::nullopt);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) away from exceptional points, stepwise near them.
/// Throws EvalError(Pole) at s = 1.
EvalResult zeta(const ComplexPoint& s, std::optional<int> m = std::nullopt);

}  // namespace etazeta

#endif  // ETAZETA_ZETA_HPP
