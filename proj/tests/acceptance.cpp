// One line per acceptance criterion check; exits nonzero if any fails.
#include <complex>
#include <cstdio>
#include <iostream>

#include "etazeta/verify.hpp"
#include "oracle/eta_oracle.hpp"

int main() {
  using namespace etazeta;
  auto checks = run_acceptance_checks();

  // the frozen reference table used by verify must itself match the live oracle
  double worst = 0.0;
  for (const auto& ref : eta_reference_values()) {
    const Complex live = oracle::eta_double(ref.sigma, ref.t);
    worst = std::max(worst, std::abs(live - Complex(ref.re, ref.im)) / std::max(1.0, std::abs(live)));
  }
  checks.push_back({8, "frozen references vs live 100-digit oracle", worst, 1e-15, worst <= 1e-15, {}});

  int failed = 0;
  for (const auto& c : checks) {
    print_check(std::cout, c);
    failed += !c.passed;
  }
  std::printf("%zu/%zu checks passed\n", checks.size() - failed, checks.size());
  for (int criterion = 1; criterion <= 9; ++criterion) {
    bool ok = true;
    for (const auto& c : checks)
      if (c.criterion == criterion) ok = ok && c.passed;
    std::printf("criterion %d: %s\n", criterion, ok ? "PASS" : "FAIL");
  }
  return failed == 0 ? 0 : 1;
}
