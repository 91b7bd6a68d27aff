#include "etazeta/types.hpp"

#include <cmath>

namespace etazeta {

bool ComplexPoint::finite() const { return std::isfinite(sigma) && std::isfinite(t); }

ErrorBudget ErrorBudget::scaled(double factor) const {
  ErrorBudget out = *this;
  out.integral_tail *= factor;
  out.series_truncation *= factor;
  out.dropped_gamma_tail *= factor;
  out.rounding *= factor;
  out.finalize();
  return out;
}

std::string_view to_string(MethodTag tag) {
  switch (tag) {
    case MethodTag::Direct26: return "Direct26";
    case MethodTag::Reflection27: return "Reflection27";
    case MethodTag::SpecialValue: return "SpecialValue";
    case MethodTag::Stepwise3: return "Stepwise3";
  }
  return "unknown";
}

}  // namespace etazeta
