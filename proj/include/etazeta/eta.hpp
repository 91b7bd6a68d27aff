#ifndef ETAZETA_ETA_HPP
#define ETAZETA_ETA_HPP

#include <array>

#include "etazeta/types.hpp"

namespace etazeta {

/// Candidate half-counts m tried by select_params, smallest first.
inline constexpr std::array<int, 7> kParamSchedule = {40, 50, 65, 80, 100, 125, 150};

inline constexpr double kDefaultTailRatio = 1e-7;

/// Direct evaluation accepts 1/2 <= sigma <= 3; its error analysis holds on [1/2, 1].
inline constexpr double kDirectSigmaMin = 0.5;
inline constexpr double kDirectSigmaMax = 3.0;

/// Smallest scheduled m whose tail ratios max_n E(n, 2m+1) / |Gamma(n+sigma+it)|
/// stay at or below target_ratio. target_ratio must lie in [1e-12, 1e-4].
/// Throws EvalError(ParameterExhaustion) when the schedule runs out.
EvalParams select_params(const ComplexPoint& s, double target_ratio = kDefaultTailRatio);

/// sum_{n=1}^{2m} (-1)^{n+1} n^{-s}, compensated, ascending n.
Complex alternating_partial_sum(const ComplexPoint& s, int m);

/// (2m+1)^{-s} [p0 + sum_{r=1}^{r_max} p_r beta^{2r-1} prod_{k=0}^{2r-2} (s+k)]
Complex correction_term(const ComplexPoint& s, const EvalParams& params);

/// Error estimate for eta_raw at (s, params); value-independent except for rounding.
ErrorBudget eta_error_budget(const ComplexPoint& s, const EvalParams& params);

/// Partial alternating sum plus correction, tagged Direct26.
/// Throws EvalError(Domain) outside kDirectSigmaMin <= sigma <= kDirectSigmaMax.
EvalResult eta_raw(const ComplexPoint& s, const EvalParams& params);

/// As above with select_params(s) at the default ratio.
EvalResult eta_raw(const ComplexPoint& s);

}  // namespace etazeta

#endif  // ETAZETA_ETA_HPP
