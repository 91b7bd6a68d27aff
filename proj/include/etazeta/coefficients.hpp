#ifndef ETAZETA_COEFFICIENTS_HPP
#define ETAZETA_COEFFICIENTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "etazeta/types.hpp"

namespace etazeta {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxSeriesDepth = 15;

/// Coefficients of the odd power series
///   1/(1+e^{-x}) = p[0] + sum_{r>=1} p[r] x^{2r-1},   |x| < pi,
/// with p[0] = 1/2 and p[r] = (2^{2r}-1) B_{2r} / (2r)!.
/// Immutable after construction.
struct CoefficientTable {
  std::vector<double> p;          // index 0..r_max
  std::vector<double> bernoulli;  // B_2, B_4, ..., B_{2 r_max}

  int r_max() const { return static_cast<int>(p.size()) - 1; }
};

/// Exact even-index Bernoulli numbers B_2 .. B_{2 r_max}, from the recurrence
/// sum_{k=0}^{n} binom(n+1, k) B_k = 0. Throws std::invalid_argument unless
/// 1 <= r_max <= 15.
std::vector<Rational> bernoulli_exact(int r_max);

/// Double-precision B_2 .. B_{2 r_max}, each rounded once from the exact value.
std::vector<double> bernoulli_numbers(int r_max);

/// Exact p[r] for r = 0..r_max.
std::vector<Rational> p_coefficients_exact(int r_max);

CoefficientTable p_coefficients(int r_max);

/// Shared table with r_max = 15. The evaluator reads p[0..7] from it and uses
/// p[8] for its truncation estimate.
const CoefficientTable& coefficient_table();

/// Large-r asymptotic form 2 (-1)^{r+1} / pi^{2r} of p[r].
double p_coefficient_asymptotic(int r);

/// C_k(s) = prod_{r=0}^{2k-1} (s+r) / ((2k+1)! 2^{2k}), for k >= 1.
/// No overflow guard: callers bound k.
Complex c_coefficient(int k, const Complex& s);

}  // namespace etazeta

#endif  // ETAZETA_COEFFICIENTS_HPP
