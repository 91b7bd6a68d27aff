#include "etazeta/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "etazeta/errors.hpp"
#include "etazeta/zeta.hpp"

namespace etazeta {

namespace {

std::string format_digits(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return {buf, res.ptr};
}

std::string json_number(double x) { return std::isfinite(x) ? format_digits(x, 17) : "null"; }

bool parse_double(std::string_view text, double& out) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

bool parse_int(std::string_view text, int& out) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

std::optional<Function> parse_function(std::string_view name) {
  if (name == "eta") return Function::Eta;
  if (name == "zeta") return Function::Zeta;
  return std::nullopt;
}

std::string_view to_string(Function f) { return f == Function::Eta ? "eta" : "zeta"; }

OutputRecord evaluate_record(Function f, const ComplexPoint& s, std::optional<int> m) {
  const EvalResult r = (f == Function::Eta) ? eta(s, m) : zeta(s, m);
  OutputRecord rec;
  rec.sigma = s.sigma;
  rec.t = s.t;
  rec.re = r.value.real();
  rec.im = r.value.imag();
  rec.abs = std::hypot(rec.re, rec.im);
  rec.method = std::string(to_string(r.method));
  rec.err_bound = r.budget.total;
  rec.m_used = r.has_params ? r.params.m : 0;
  return rec;
}

OutputRecord error_record(const ComplexPoint& s) {
  OutputRecord rec;
  rec.sigma = s.sigma;
  rec.t = s.t;
  rec.method = "error";
  rec.failed = true;
  return rec;
}

std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

std::string to_csv_row(const OutputRecord& rec) {
  std::string row = format_shortest(rec.sigma) + ',' + format_shortest(rec.t) + ',';
  if (rec.failed) return row + ",,," + rec.method + ",,";
  row += format_shortest(rec.re) + ',' + format_shortest(rec.im) + ',' + format_shortest(rec.abs) + ',';
  row += rec.method + ',' + format_shortest(rec.err_bound) + ',' + std::to_string(rec.m_used);
  return row;
}

std::string to_json_line(const OutputRecord& rec) {
  std::ostringstream os;
  os << "{\"sigma\":" << json_number(rec.sigma) << ",\"t\":" << json_number(rec.t);
  if (rec.failed) {
    os << ",\"re\":null,\"im\":null,\"abs\":null,\"method\":\"error\",\"err_bound\":null,\"m_used\":null}";
    return os.str();
  }
  os << ",\"re\":" << json_number(rec.re) << ",\"im\":" << json_number(rec.im)
     << ",\"abs\":" << json_number(rec.abs) << ",\"method\":\"" << rec.method << '"'
     << ",\"err_bound\":" << json_number(rec.err_bound) << ",\"m_used\":" << rec.m_used << '}';
  return os.str();
}

std::string to_text(Function f, const OutputRecord& rec) {
  std::ostringstream os;
  os << to_string(f) << '(' << format_digits(rec.sigma, 12) << (rec.t < 0 ? " - " : " + ")
     << format_digits(std::abs(rec.t), 12) << "i)\n";
  if (rec.failed) {
    os << "  method     error\n";
    return os.str();
  }
  os << "  re         " << format_digits(rec.re, 12) << '\n'
     << "  im         " << format_digits(rec.im, 12) << '\n'
     << "  abs        " << format_digits(rec.abs, 12) << '\n'
     << "  method     " << rec.method << '\n'
     << "  err_bound  " << format_digits(rec.err_bound, 3) << '\n'
     << "  m_used     " << rec.m_used << '\n';
  return os.str();
}

std::optional<OutputRecord> parse_csv_row(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8) return std::nullopt;

  OutputRecord rec;
  if (!parse_double(fields[0], rec.sigma) || !parse_double(fields[1], rec.t)) return std::nullopt;
  rec.method = std::string(fields[5]);
  if (rec.method == "error") {
    rec.failed = true;
    return rec;
  }
  if (!parse_double(fields[2], rec.re) || !parse_double(fields[3], rec.im) ||
      !parse_double(fields[4], rec.abs) || !parse_double(fields[6], rec.err_bound) ||
      !parse_int(fields[7], rec.m_used))
    return std::nullopt;
  return rec;
}

std::size_t ScanGrid::count() const {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !std::isfinite(step))
    throw std::invalid_argument("scan grid values must be finite");
  if (!(step > 0.0)) throw std::invalid_argument("scan step must be positive");
  if (t_min > t_max) throw std::invalid_argument("scan requires t_min <= t_max");
  const double q = (t_max - t_min) / step;
  // absorb representation error in decimal grids such as 14.13..14.14 by 0.001
  const double intervals = std::floor(q + 1e-9 * std::max(1.0, q));
  if (intervals + 1.0 > static_cast<double>(kMaxPoints))
    throw std::invalid_argument("scan grid exceeds 1000000 points");
  return static_cast<std::size_t>(intervals) + 1;
}

std::vector<OutputRecord> scan(Function f, double sigma, const ScanGrid& grid, unsigned threads) {
  const std::size_t n = grid.count();
  std::vector<OutputRecord> out(n);

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n; i += stride) {
      const ComplexPoint s(sigma, grid.at(i));
      try {
        out[i] = evaluate_record(f, s);
      } catch (const EvalError&) {
        out[i] = error_record(s);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    work(0, 1);
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  pool.clear();  // joins
  return out;
}

}  // namespace etazeta
