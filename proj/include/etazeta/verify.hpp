#ifndef ETAZETA_VERIFY_HPP
#define ETAZETA_VERIFY_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "etazeta/types.hpp"

namespace etazeta {

struct CheckResult {
  int criterion = 0;  // acceptance criterion number, 1..9
  std::string name;
  double measured = 0.0;
  double allowed = 0.0;
  bool passed = false;
  std::string note;
};

/// High-precision eta reference at an exactly representable point.
struct ReferenceValue {
  double sigma;
  double t;
  double re;
  double im;
};

/// 30-digit references (rounded to double): the 15-point grid
/// sigma in {0.5, 0.75, 1} x t in {0, 5, 14.1, 25, 40}, then extra points
/// covering the reflected and sigma > 1 ranges.
std::span<const ReferenceValue> eta_reference_values();
inline constexpr std::size_t kReferenceGridSize = 15;

/// The values printed in the right-hand column of the published eta table on
/// s = 1 + n pi i / ln 2 for odd n = 1, 3, ..., 11.
struct PublishedRow {
  int n;
  double re;
  double im;
};
std::span<const PublishedRow> published_odd_rows();

/// Runs every acceptance check.
std::vector<CheckResult> run_acceptance_checks();

void print_check(std::ostream& os, const CheckResult& check);

/// Prints each check and a summary line; returns true iff all pass.
bool run_verification(std::ostream& os);

}  // namespace etazeta

#endif  // ETAZETA_VERIFY_HPP
