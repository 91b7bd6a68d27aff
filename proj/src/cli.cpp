#include "etazeta/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>

#include "etazeta/errors.hpp"
#include "etazeta/eta.hpp"
#include "etazeta/output.hpp"
#include "etazeta/verify.hpp"

namespace etazeta {

namespace {

std::string diagnostic(const EvalError& e) {
  switch (e.kind()) {
    case ErrorKind::Pole: return "pole at s=1";
    case ErrorKind::Domain: return "outside supported sigma range";
    case ErrorKind::ParameterExhaustion: return "parameter exhaustion";
    case ErrorKind::StepwiseRange: return "exceptional point requires stepwise path beyond |t|<=20";
    default: return e.what();
  }
}

int cmd_eval(Function f, double sigma, double t, std::optional<int> m, const std::string& format,
             std::ostream& out, std::ostream& err) {
  OutputRecord rec;
  try {
    rec = evaluate_record(f, {sigma, t}, m);
  } catch (const EvalError& e) {
    err << "error: " << diagnostic(e) << '\n';
    return kExitUsage;
  }
  if (format == "json") {
    out << to_json_line(rec) << '\n';
  } else if (format == "csv") {
    out << kCsvHeader << '\n' << to_csv_row(rec) << '\n';
  } else {
    out << to_text(f, rec);
  }
  return kExitOk;
}

int cmd_scan(Function f, double sigma, const ScanGrid& grid, const std::string& format, unsigned threads,
             std::ostream& out, std::ostream& err) {
  if (!(sigma >= -0.5 && sigma <= 3.0)) {
    err << "error: outside supported sigma range\n";
    return kExitUsage;
  }
  std::vector<OutputRecord> records;
  try {
    records = scan(f, sigma, grid, threads);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (format == "json") {
    for (const auto& rec : records) out << to_json_line(rec) << '\n';
  } else {
    out << kCsvHeader << '\n';
    for (const auto& rec : records) out << to_csv_row(rec) << '\n';
  }
  return kExitOk;
}

int cmd_table2(int m, std::ostream& out, std::ostream& err) {
  char line[160];
  out << " n   eta(1 + n pi i / ln 2), m = " << m << "                 zero\n";
  for (int n = 0; n <= 11; ++n) {
    const ComplexPoint s(1.0, n * std::numbers::pi / std::numbers::ln2);
    Complex v;
    try {
      v = eta_raw(s, EvalParams{m}).value;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    const bool zero = std::abs(v) < 1e-9;
    if (zero)
      std::snprintf(line, sizeof line, "%2d   %+.3e %+.3ei %24s\n", n, v.real(), v.imag(), "X");
    else
      std::snprintf(line, sizeof line, "%2d   %+.12f %+.12fi\n", n, v.real(), v.imag());
    out << line;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating zeta eta(s) and Riemann zeta(s) in and around the critical strip",
               "eta-zeta"};
  app.require_subcommand(1);

  std::string function_name;
  double sigma = 0.0;
  double t = 0.0;
  std::optional<int> m;
  std::string format = "text";
  auto* eval = app.add_subcommand("eval", "Evaluate eta or zeta at one point");
  eval->add_option("function", function_name, "eta or zeta")->required()->check(CLI::IsMember({"eta", "zeta"}));
  eval->add_option("sigma", sigma, "real part")->required();
  eval->add_option("t", t, "imaginary part")->required();
  eval->add_option("--m", m, "half-count m (b = 2m+1); default chosen from t")->check(CLI::PositiveNumber);
  eval->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string scan_function;
  double scan_sigma = 0.0;
  ScanGrid grid;
  std::string scan_format = "csv";
  unsigned threads = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Evaluate along a vertical line, ascending t");
  scan_cmd->add_option("function", scan_function, "eta or zeta")
      ->required()
      ->check(CLI::IsMember({"eta", "zeta"}));
  scan_cmd->add_option("--sigma", scan_sigma, "real part")->required();
  scan_cmd->add_option("--t-min", grid.t_min, "first t")->required();
  scan_cmd->add_option("--t-max", grid.t_max, "last t (inclusive)")->required();
  scan_cmd->add_option("--step", grid.step, "grid spacing")->required();
  scan_cmd->add_option("--format", scan_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");

  int table_m = 50;
  auto* table2 = app.add_subcommand("table2", "eta on 1 + n pi i / ln 2, n = 0..11");
  table2->add_option("--m", table_m, "half-count m")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (eval->parsed())
    return cmd_eval(*parse_function(function_name), sigma, t, m, format, out, err);
  if (scan_cmd->parsed())
    return cmd_scan(*parse_function(scan_function), scan_sigma, grid, scan_format, threads, out, err);
  if (table2->parsed()) return cmd_table2(table_m, out, err);
  if (verify->parsed()) return run_verification(out) ? kExitOk : kExitVerifyFailed;
  return kExitUsage;
}

}  // namespace etazeta
