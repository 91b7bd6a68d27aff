#ifndef ETAZETA_ERRORS_HPP
#define ETAZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etazeta {

enum class ErrorKind {
  Domain,               // sigma outside the supported band, or non-finite input
  Pole,                 // s = 1 for zeta, non-positive integer for gamma
  ParameterExhaustion,  // no scheduled m meets the requested tail ratio
  Indeterminate,        // 0/0 in the eta functional equation near 1 - 2^{1-s} = 0
  StepwiseRange,        // stepwise continuation requested for |t| > 20
  NonConvergent,        // stepwise series hit k_max
  Overflow,             // |Gamma(z)| beyond double range
};

class EvalError : public std::runtime_error {
 public:
  EvalError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace etazeta

#endif  // ETAZETA_ERRORS_HPP
