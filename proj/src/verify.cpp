#include "etazeta/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "etazeta/coefficients.hpp"
#include "etazeta/errors.hpp"
#include "etazeta/eta.hpp"
#include "etazeta/gamma.hpp"
#include "etazeta/output.hpp"
#include "etazeta/zeta.hpp"

namespace etazeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

// 30-digit values of eta at the listed (double) points, rounded to double.
constexpr std::array<ReferenceValue, 24> kReferences = {{
    {0.5, 0, 0.6048986434216303702472659, 0.0},
    {0.5, 5, 1.746703512574577404092393, 0.2246478682849698584955574},
    {0.5, 14.1, -0.002127666701522172518144253, -0.06529250826597250800305168},
    {0.5, 25, -0.01515886136438345954845982, -0.02006397827538647511967399},
    {0.5, 40, 2.517840606624115907067315, -1.713157187374560383904806},
    {0.75, 0, 0.6511156799649282540122898, 0.0},
    {0.75, 5, 1.634807369164452014485216, 0.1561930737412669087464011},
    {0.75, 14.1, 0.3837939767651376433780966, -0.06808565655678314293904184},
    {0.75, 25, 0.3536544682716782383450643, -0.2604539152056825628210794},
    {0.75, 40, 2.106412907032287427367706, -0.9112534148765847675774268},
    {1, 0, 0.6931471805599453094172321, 0.0},
    {1, 5, 1.537713371870916000858363, 0.1056727664483015012347977},
    {1, 14.1, 0.6387443066702982340102407, -0.07027787774355361468017902},
    {1, 25, 0.580507123613269872744529, -0.3584781797531550745919351},
    {1, 40, 1.831349682715548097292083, -0.4683750444797993524971794},
    {0.25, 5, 1.87442327146009106154755, 0.3164593843757680920034638},
    {0.25, 0, 0.5544873859140731215493525, 0.0},
    {-0.3, 7, 2.097666828656429771821607, -2.025167155893527763115451},
    {0.1, 14.134725, -1.056223757849701957120639, 0.05239335644824522070895468},
    {-0.5, 20, 7.670639112255565487763455, -3.143563825648389330439098},
    {0, 9.0647202836543876192, -1.598734526808690270063285, -0.2783386696390809698487492},
    {2, 0, 0.8224670334241132182362076, 0.0},
    {3, -12.5, 1.111497903329037216874038, -0.02962512288750407189583155},
    {0.6, -33, 0.2741506128448352651703497, -0.1738456389366303643173269},
}};

constexpr std::array<PublishedRow, 6> kPublishedOdd = {{
    {1, 1.437551, 0.249393},
    {3, 0.803791, -0.442143},
    {5, 2.111898, 0.441761},
    {7, 4.893007, -0.100872},
    {9, 0.973771, -0.301917},
    {11, 0.855469, 0.382103},
}};

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

CheckResult less_than(int criterion, std::string name, double measured, double allowed,
                      std::string note = {}) {
  return {criterion, std::move(name), measured, allowed, measured < allowed, std::move(note)};
}

CheckResult at_most(int criterion, std::string name, double measured, double allowed,
                    std::string note = {}) {
  return {criterion, std::move(name), measured, allowed, measured <= allowed, std::move(note)};
}

EvalResult direct(double sigma, double t, int m) {
  EvalParams params;
  params.m = m;
  return eta_raw({sigma, t}, params);
}

ComplexPoint table_point(int n) { return {1.0, n * kPi / kLn2}; }

void eta_at_one(std::vector<CheckResult>& out) {
  for (const auto& [m, allowed] : {std::pair{50, 1e-11}, std::pair{40, 1.5e-9}}) {
    const EvalResult r = direct(1.0, 0.0, m);
    out.push_back(less_than(1, "eta(1) m=" + std::to_string(m), std::abs(r.value - kLn2), allowed,
                            "value " + fmt("%.13f", r.value.real())));
  }
}

void eta_and_zeta_at_half(std::vector<CheckResult>& out) {
  constexpr double kPrinted = 0.604898643422;
  for (int m : {40, 50}) {
    const EvalResult r = direct(0.5, 0.0, m);
    const std::string shown = fmt("%.12g", r.value.real());
    CheckResult c = at_most(2, "eta(0.5) m=" + std::to_string(m) + " prints 0.604898643422",
                            std::abs(r.value.real() - kPrinted), 5e-13, "printed " + shown);
    c.passed = c.passed && shown == "0.604898643422";
    out.push_back(c);
  }
  constexpr double kZetaHalf = -1.4603545;
  const EvalResult z = zeta({0.5, 0.0});
  out.push_back(at_most(2, "zeta(0.5) = -1.4603545 (7 significant)",
                        std::abs(z.value.real() - kZetaHalf) / std::abs(kZetaHalf), 5e-7,
                        "value " + fmt("%.10f", z.value.real())));
}

void table_two(std::vector<CheckResult>& out) {
  {
    const EvalResult r = eta_raw(table_point(0), EvalParams{50});
    out.push_back(less_than(3, "table row n=0 equals ln 2", std::abs(r.value - kLn2), 1e-11));
  }
  for (int n = 2; n <= 10; n += 2) {
    const EvalResult r = eta_raw(table_point(n), EvalParams{50});
    out.push_back(less_than(3, "table zero n=" + std::to_string(n), std::abs(r.value), 1e-11));
  }
  for (const auto& row : kPublishedOdd) {
    const EvalResult r = eta_raw(table_point(row.n), EvalParams{50});
    const double diff = std::max(std::abs(r.value.real() - row.re), std::abs(r.value.imag() - row.im));
    out.push_back(at_most(3, "table row n=" + std::to_string(row.n) + " vs published 6 decimals", diff,
                          5e-7,
                          "computed " + fmt("%.6f", r.value.real()) + fmt(" %+.6fi", r.value.imag())));
  }
}

void critical_line_zeros(std::vector<CheckResult>& out) {
  out.push_back(at_most(4, "zero s_1 = 0.5+14.134725i m=40", std::abs(direct(0.5, 14.134725, 40).value),
                        5e-7));
  out.push_back(at_most(4, "zero s_10 = 0.5+49.773832i m=40",
                        std::abs(direct(0.5, 49.773832, 40).value), 5e-6));
}

void special_values(std::vector<CheckResult>& out) {
  const EvalResult e0 = eta({0.0, 0.0});
  out.push_back(at_most(5, "eta(0) special value", std::abs(e0.value - 0.5), 1e-9));
  // s -> 0 through the functional equation; the 0/0 at conj(1-s) near 1 goes stepwise
  const EvalResult near0 = eta({-1e-10, 0.0});
  out.push_back(at_most(5, "eta(-1e-10) via reflection limit", std::abs(near0.value - 0.5), 1e-9,
                        "method " + std::string(to_string(near0.method))));
  const EvalResult z0 = zeta({0.0, 0.0});
  out.push_back(at_most(5, "zeta(0) special value", std::abs(z0.value + 0.5), 1e-9));
  const EvalResult znear0 = zeta({-1e-10, 0.0});
  out.push_back(at_most(5, "zeta(-1e-10) via reflection limit", std::abs(znear0.value + 0.5), 1e-9));
  out.push_back(at_most(5, "zeta(0) stepwise", std::abs(zeta_em_stepwise({0.0, 0.0}) + 0.5), 1e-9));
}

void parameter_criteria(std::vector<CheckResult>& out) {
  out.push_back(less_than(6, "max tail ratio b=81 t=40", max_tail_ratio(1.0, 40.0, 81.0), 1e-5));
  out.push_back(less_than(6, "max tail ratio b=101 t=50", max_tail_ratio(1.0, 50.0, 101.0), 1e-7));
}

void coefficient_table_check(std::vector<CheckResult>& out) {
  struct Row {
    long long num;
    long long den;
    double printed;
    int digits;
  };
  constexpr std::array<Row, 8> kTable = {{
      {1, 2, 0.5, 1},
      {1, 4, 0.25, 2},
      {-1, 48, -2.083333e-2, 7},
      {1, 480, 2.083333e-3, 7},
      {-17, 80640, -2.10813492e-4, 9},
      {31, 1451520, 2.1356922e-5, 8},
      {-691, 319334400, -2.163876e-6, 7},
      {5461, 24908083200LL, 2.19246e-7, 6},
  }};
  const auto exact = p_coefficients_exact(7);
  const auto& p = coefficient_table().p;
  for (int r = 0; r <= 7; ++r) {
    const Row& row = kTable[r];
    const bool fraction_ok = exact[r] == Rational(row.num, row.den);
    const double half_unit =
        0.5 * std::pow(10.0, std::floor(std::log10(std::abs(row.printed))) - (row.digits - 1));
    CheckResult c = at_most(7, "P_" + std::to_string(r == 0 ? 0 : 2 * r - 1) + " = " +
                                   std::to_string(row.num) + "/" + std::to_string(row.den),
                            std::abs(p[r] - row.printed), half_unit,
                            fraction_ok ? "exact fraction matches" : "exact fraction MISMATCH");
    c.passed = c.passed && fraction_ok;
    out.push_back(c);
  }
  const double rel = std::abs(p_coefficient_asymptotic(7) - p[7]) / std::abs(p[7]);
  out.push_back(less_than(7, "asymptotic form at r=7 vs P_13", rel, 1e-4));
}

constexpr std::array<ComplexPoint, 20> kSymmetryGrid = {{
    {0.5, 14.134725}, {0.5, 3.0},   {0.75, 7.5},  {1.0, 9.0},   {1.0, 25.0},
    {0.6, 33.0},      {0.9, 47.0},  {1.5, 4.0},   {2.0, 11.0},  {3.0, 2.0},
    {0.25, 5.0},      {0.1, 14.134725}, {-0.3, 7.0}, {-0.5, 20.0}, {0.4, 0.7},
    {0.0, 3.0},       {0.3, 40.0},  {1.0, 9.0647202836543876192}, {0.7, 18.13}, {-0.2, 12.0},
}};

void property_suites(std::vector<CheckResult>& out) {
  for (Function f : {Function::Eta, Function::Zeta}) {
    double worst = 0.0;
    double worst_allowed = 0.0;
    bool ok = true;
    for (const auto& s : kSymmetryGrid) {
      const auto eval = [f](const ComplexPoint& p) { return f == Function::Eta ? eta(p) : zeta(p); };
      const Complex a = eval(s).value;
      const Complex b = eval(s.conj()).value;
      const double diff = std::abs(b - std::conj(a));
      const double allowed = 4.0 * kEps * std::abs(a);
      ok = ok && diff <= allowed;
      if (diff >= worst) {
        worst = diff;
        worst_allowed = allowed;
      }
    }
    CheckResult c = at_most(8, std::string("conjugation symmetry ") + std::string(to_string(f)) +
                                   " on 20 points",
                            worst, worst_allowed);
    c.passed = ok;
    out.push_back(c);
  }

  {
    double worst = 0.0;
    bool ok = true;
    for (const auto& s : kSymmetryGrid) {
      if (s.sigma < 0.5 || exceptional_proximity(s).distance < 1e-2) continue;
      const Complex e = eta(s).value;
      const Complex z = zeta(s).value;
      const double rel = std::abs(z * conversion_factor(s.value()) - e) / std::abs(e);
      worst = std::max(worst, rel);
      ok = ok && rel <= 8.0 * kEps;
    }
    CheckResult c = at_most(8, "zeta (1-2^{1-s}) = eta, relative", worst, 8.0 * kEps);
    c.passed = ok;
    out.push_back(c);
  }

  for (const ComplexPoint s : {ComplexPoint{0.8, 3.0}, ComplexPoint{1.0, 9.0}, ComplexPoint{0.6, 12.0}}) {
    const double diff = std::abs(zeta(s).value - zeta_em_stepwise(s));
    out.push_back(less_than(8, "eta route vs stepwise at " + fmt("%g", s.sigma) + fmt("%+gi", s.t), diff,
                            1e-8));
  }

  for (int m : {40, 50}) {
    double worst_excess = -1.0;
    std::string where;
    double worst_diff = 0.0;
    double worst_allowed = 0.0;
    for (std::size_t i = 0; i < kReferenceGridSize; ++i) {
      const auto& ref = kReferences[i];
      const EvalResult r = direct(ref.sigma, ref.t, m);
      const double diff = std::abs(r.value - Complex(ref.re, ref.im));
      const double allowed = std::max(r.budget.total, 5e-12);
      if (diff / allowed > worst_excess) {
        worst_excess = diff / allowed;
        worst_diff = diff;
        worst_allowed = allowed;
        where = fmt("worst at %g", ref.sigma) + fmt("%+gi", ref.t);
      }
    }
    out.push_back(at_most(8, "oracle agreement, 15-point grid, m=" + std::to_string(m), worst_diff,
                          worst_allowed, where));
  }

  for (std::size_t i = kReferenceGridSize; i < kReferences.size(); ++i) {
    const auto& ref = kReferences[i];
    const EvalResult r = eta({ref.sigma, ref.t});
    const double diff = std::abs(r.value - Complex(ref.re, ref.im));
    out.push_back(at_most(8, "oracle agreement eta(" + fmt("%g", ref.sigma) + fmt("%+gi)", ref.t), diff,
                          std::max(r.budget.total, 5e-12),
                          "method " + std::string(to_string(r.method))));
  }
}

std::string scan_csv(Function f, double sigma, const ScanGrid& grid, unsigned threads) {
  std::string csv(kCsvHeader);
  csv += '\n';
  for (const auto& rec : scan(f, sigma, grid, threads)) csv += to_csv_row(rec) + '\n';
  return csv;
}

void determinism(std::vector<CheckResult>& out) {
  const ScanGrid eta_grid{0.0, 30.0, 0.25};
  const ScanGrid zeta_grid{0.0, 20.0, 0.5};
  bool identical = true;
  for (const auto& [f, sigma, grid] :
       {std::tuple{Function::Eta, 0.5, eta_grid}, std::tuple{Function::Zeta, 1.0, zeta_grid},
        std::tuple{Function::Eta, -0.25, zeta_grid}}) {
    const std::string serial = scan_csv(f, sigma, grid, 1);
    identical = identical && serial == scan_csv(f, sigma, grid, 1) && serial == scan_csv(f, sigma, grid, 4);
  }
  out.push_back({9, "serial, repeated and 4-thread scans give identical CSV", identical ? 0.0 : 1.0, 0.0,
                 identical, {}});

  // re-evaluating each emitted (sigma, t, m_used) reproduces re/im exactly
  std::size_t mismatches = 0;
  for (const auto& rec : scan(Function::Zeta, 0.75, zeta_grid, 4)) {
    const auto parsed = parse_csv_row(to_csv_row(rec));
    if (!parsed) {
      ++mismatches;
      continue;
    }
    const std::optional<int> m = parsed->m_used > 0 ? std::optional<int>(parsed->m_used) : std::nullopt;
    const OutputRecord again = evaluate_record(Function::Zeta, {parsed->sigma, parsed->t}, m);
    if (again.re != parsed->re || again.im != parsed->im) ++mismatches;
  }
  out.push_back({9, "CSV round trip re-evaluates bit-identically", static_cast<double>(mismatches), 0.0,
                 mismatches == 0, {}});
}

}  // namespace

std::span<const ReferenceValue> eta_reference_values() { return kReferences; }

std::span<const PublishedRow> published_odd_rows() { return kPublishedOdd; }

std::vector<CheckResult> run_acceptance_checks() {
  std::vector<CheckResult> out;
  eta_at_one(out);
  eta_and_zeta_at_half(out);
  table_two(out);
  critical_line_zeros(out);
  special_values(out);
  parameter_criteria(out);
  coefficient_table_check(out);
  property_suites(out);
  determinism(out);
  return out;
}

void print_check(std::ostream& os, const CheckResult& check) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e <= %.3e", check.measured, check.allowed);
  os << (check.passed ? "PASS" : "FAIL") << "  [" << check.criterion << "] " << check.name << "  (" << buf
     << ')';
  if (!check.note.empty()) os << "  " << check.note;
  os << '\n';
}

bool run_verification(std::ostream& os) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> checks;
  try {
    checks = run_acceptance_checks();
  } catch (const std::exception& e) {
    os << "FAIL  verification aborted: " << e.what() << '\n';
    return false;
  }
  std::size_t failed = 0;
  for (const auto& c : checks) {
    print_check(os, c);
    if (!c.passed) ++failed;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  os << (checks.size() - failed) << '/' << checks.size() << " checks passed in " << fmt("%.2f", seconds)
     << " s\n";
  return failed == 0;
}

}  // namespace etazeta
