#ifndef ETAZETA_OUTPUT_HPP
#define ETAZETA_OUTPUT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etazeta/types.hpp"

namespace etazeta {

enum class Function { Eta, Zeta };

std::optional<Function> parse_function(std::string_view name);
std::string_view to_string(Function f);

/// One evaluated point as emitted by the CLI. A failed point keeps sigma and t,
/// has method "error" and leaves the numeric fields unset.
struct OutputRecord {
  double sigma = 0.0;
  double t = 0.0;
  double re = 0.0;
  double im = 0.0;
  double abs = 0.0;
  std::string method;
  double err_bound = 0.0;
  int m_used = 0;  // 0 when the path has no m (special values, stepwise)
  bool failed = false;
};

/// Evaluates f at s; m overrides automatic parameter selection.
/// Propagates EvalError.
OutputRecord evaluate_record(Function f, const ComplexPoint& s, std::optional<int> m = std::nullopt);

OutputRecord error_record(const ComplexPoint& s);

inline constexpr std::string_view kCsvHeader = "sigma,t,re,im,abs,method,err_bound,m_used";

/// Shortest decimal that reads back to the same double.
std::string format_shortest(double x);

std::string to_csv_row(const OutputRecord& rec);
/// Single-line JSON object, numbers with 17 significant digits.
std::string to_json_line(const OutputRecord& rec);
/// Human-readable block, values to 12 significant digits.
std::string to_text(Function f, const OutputRecord& rec);

/// Parses one CSV row produced by to_csv_row. Returns nullopt on malformed input.
std::optional<OutputRecord> parse_csv_row(std::string_view line);

struct ScanGrid {
  static constexpr std::size_t kMaxPoints = 1'000'000;

  double t_min = 0.0;
  double t_max = 0.0;
  double step = 1.0;

  /// floor((t_max - t_min)/step) + 1; throws std::invalid_argument on a bad grid.
  std::size_t count() const;
  double at(std::size_t i) const { return t_min + static_cast<double>(i) * step; }
};

/// Records in ascending t. Points are evaluated on up to `threads` workers
/// (0 = hardware concurrency); the result does not depend on the thread count.
/// A point whose evaluation fails becomes an error_record.
std::vector<OutputRecord> scan(Function f, double sigma, const ScanGrid& grid, unsigned threads = 0);

}  // namespace etazeta

#endif  // ETAZETA_OUTPUT_HPP
