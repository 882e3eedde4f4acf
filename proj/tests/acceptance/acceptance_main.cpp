// Acceptance run: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the listed numbers. Exit status is non-zero
// when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/oracles.hpp"
#include "zetalab/diagnostics.hpp"
#include "zetalab/harness.hpp"
#include "zetalab/report.hpp"
#include "zetalab/series_core.hpp"
#include "zetalab/zero_finder.hpp"

using namespace zetalab;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", value);
  return buffer;
}

// Same seeded strip grid for criteria 1 and 2.
struct GridPoint {
  StripPoint s;
  std::int64_t n;
};

std::vector<GridPoint> identity_grid() {
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> sigma(0.05, 0.95);
  std::uniform_real_distribution<double> t(-40.0, 40.0);
  std::uniform_int_distribution<std::int64_t> n(1, 2000);
  std::vector<GridPoint> grid;
  for (int i = 0; i < 100; ++i) {
    const double a = sigma(rng);
    const double b = t(rng);
    grid.push_back({{a, b}, n(rng)});
  }
  return grid;
}

std::vector<diagnostics::DiagnosticRecord> identity_records() {
  static const auto records = [] {
    std::vector<diagnostics::DiagnosticRecord> out;
    for (const auto& p : identity_grid()) {
      const std::vector<std::int64_t> n_list{p.n};
      out.push_back(
          diagnostics::diagnostic_series(p.s, n_list, diagnostics::BrutePolicy::Always).front());
    }
    return out;
  }();
  return records;
}

Outcome combined_sum_identity() {
  double worst = 0.0;
  for (const auto& r : identity_records()) {
    const double residual =
        std::abs(r.power_sum + 2.0 * r.cross_term - r.eta_abs_sq) / std::max(1.0, r.power_sum);
    worst = std::max(worst, residual);
  }
  return {worst <= 1e-9, "100 points, worst relative residual " + fmt(worst)};
}

Outcome fast_brute_equivalence() {
  double worst = 0.0;
  for (const auto& r : identity_records()) {
    const double gap =
        std::abs(r.cross_term_fast - r.cross_term) / std::max(1.0, std::abs(r.cross_term));
    worst = std::max(worst, gap);
  }
  return {worst <= 1e-9, "100 points, worst relative gap " + fmt(worst)};
}

Outcome known_values() {
  const double zeta2 = series::zeta_from_eta({2.0, 0.0}).value.real();
  const double eta1 = series::eta_accelerated({1.0, 0.0}, 1e-12).value.real();
  const double gamma_half = series::gamma_complex({0.5, 0.0}).real();
  const double e_zeta = std::abs(zeta2 - kPi * kPi / 6.0);
  const double e_eta = std::abs(eta1 - std::numbers::ln2);
  const double e_gamma = std::abs(gamma_half - std::sqrt(kPi));
  // The closed forms are cross-checked against independent summations.
  const double o_zeta = std::abs(zeta2 - 2.0 * static_cast<double>(oracle::eta_pairwise(2.0L)));
  const double o_eta = std::abs(eta1 - static_cast<double>(oracle::eta_pairwise(1.0L)));
  const bool ok = e_zeta <= 1e-10 && e_eta <= 1e-12 && e_gamma <= 1e-10 && o_zeta <= 1e-10 &&
                  o_eta <= 1e-12;
  return {ok, "zeta(2) " + fmt(e_zeta) + ", eta(1) " + fmt(e_eta) + ", gamma(1/2) " +
                  fmt(e_gamma)};
}

Outcome functional_equation() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> sigma(0.2, 0.8);
  std::uniform_real_distribution<double> t(2.0, 30.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = sigma(rng);
    const double b = t(rng) * (i % 2 == 0 ? 1.0 : -1.0);
    worst = std::max(worst, series::functional_equation_residual({a, b}));
  }
  return {worst < 1e-6, "20 points, worst residual " + fmt(worst)};
}

Outcome first_three_zeros() {
  const double expected[] = {14.134725, 21.022040, 25.010858};
  const auto found = zeros::scan_zeros(10.0, 30.0, zeros::kDefaultScanStep);
  const auto dense = oracle::critical_zeros(10.0L, 30.0L, 1e-3L);
  if (found.size() != 3 || dense.size() != 3) {
    return {false, "found " + std::to_string(found.size()) + " zeros, dense oracle " +
                       std::to_string(dense.size())};
  }
  double worst_t = 0.0;
  double worst_oracle = 0.0;
  double worst_residual = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    worst_t = std::max(worst_t, std::abs(found[i].refined_t - expected[i]));
    worst_oracle =
        std::max(worst_oracle, std::abs(found[i].refined_t - static_cast<double>(dense[i])));
    worst_residual =
        std::max({worst_residual, found[i].eta_residual, found[i].zeta_residual});
  }
  const bool ok = worst_t <= 1e-6 && worst_oracle <= 1e-6 && worst_residual < 1e-6;
  return {ok, "max |t - t_ref| " + fmt(worst_t) + ", vs dense scan " + fmt(worst_oracle) +
                  ", max residual " + fmt(worst_residual)};
}

Outcome zero_equivalence() {
  bool ok = true;
  double worst = 0.0;
  for (const auto& c : zeros::scan_zeros(10.0, 30.0, zeros::kDefaultScanStep)) {
    const auto report = zeros::verify_zero_equivalence({0.5, c.refined_t});
    ok = ok && report.verdict == zeros::EquivalenceVerdict::BothZero;
    worst = std::max({worst, report.eta_abs, report.zeta_abs});
  }
  const auto boundary =
      zeros::verify_zero_equivalence({1.0, 2.0 * kPi / std::numbers::ln2});
  ok = ok && boundary.eta_abs < 1e-6 && boundary.zeta_abs > 0.1;
  return {ok, "worst residual at zeros " + fmt(worst) + "; at 1 + 2 pi i / ln 2: |eta| " +
                  fmt(boundary.eta_abs) + ", |zeta| " + fmt(boundary.zeta_abs)};
}

Outcome critical_line_divergence() {
  const double t = zeros::scan_zeros(14.0, 15.0, zeros::kDefaultScanStep).front().refined_t;
  const std::vector<std::int64_t> n_list{1'000, 10'000, 100'000, 1'000'000};
  const auto records =
      diagnostics::diagnostic_series({0.5, t}, n_list, diagnostics::BrutePolicy::Never);
  bool decreasing = true;
  std::vector<double> log_n;
  std::vector<double> cross;
  std::string trail;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double combined = std::abs(2.0 * records[i].cross_term + records[i].power_sum);
    if (i > 0) {
      const double previous =
          std::abs(2.0 * records[i - 1].cross_term + records[i - 1].power_sum);
      decreasing = decreasing && combined < previous;
    }
    trail += (i == 0 ? "" : " > ") + fmt(combined);
    log_n.push_back(std::log(static_cast<double>(records[i].n_terms)));
    cross.push_back(records[i].cross_term);
  }
  const double slope = diagnostics::least_squares_slope(log_n, cross);
  const bool ok = decreasing && slope >= -0.55 && slope <= -0.45;
  return {ok, "|2T_N + H_N|: " + trail + "; slope " + fmt(slope)};
}

Outcome off_line_case() {
  bool c_ok = true;
  double worst = 0.0;
  for (int i = 0; i <= 8; ++i) {
    const double sigma = 0.55 + 0.05 * i;
    const auto c = diagnostics::c_alpha(sigma);
    const double reference = static_cast<double>(oracle::zeta_em(2.0L * sigma).real());
    worst = std::max(worst, std::abs(c.value - reference));
    c_ok = c_ok && c.exceeds_one && c.value > 1.0;
  }
  c_ok = c_ok && worst <= 1e-8;

  // |S_{2N} - S_N| must decrease over N = 10^3 .. 10^6.
  const StripPoint s{0.7, 14.134725};
  const std::vector<std::int64_t> n_list{1'000, 2'000, 10'000, 20'000, 100'000, 200'000,
                                         1'000'000, 2'000'000};
  const auto records = diagnostics::diagnostic_series(s, n_list, diagnostics::BrutePolicy::Never);
  std::vector<double> increments;
  for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
    increments.push_back(std::abs(records[i + 1].combined_sum - records[i].combined_sum));
  }
  bool decreasing = true;
  std::string trail;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    if (i > 0) decreasing = decreasing && increments[i] < increments[i - 1];
    trail += (i == 0 ? "" : ", ") + fmt(increments[i]);
  }
  const double limit = std::norm(series::eta_accelerated(s.value(), 1e-12).value);
  const double drift = std::abs(records.back().combined_sum - limit);
  return {c_ok && decreasing, "c_alpha worst gap " + fmt(worst) +
                                  (c_ok ? " ok" : " FAILED") + "; |S_2N - S_N| at N = 1e3..1e6: " +
                                  trail + (decreasing ? "" : " (not monotone)") +
                                  "; |S_N - |eta|^2| at 2e6: " + fmt(drift)};
}

bool same_cell(const report::Cell& cell, const std::string& text) {
  if (const auto* real = std::get_if<double>(&cell)) {
    const auto parsed = report::parse_double(text);
    return parsed && (std::isnan(*real) ? std::isnan(*parsed)
                                        : std::memcmp(&*parsed, real, sizeof(double)) == 0);
  }
  return report::format_cell(cell) == text;
}

bool same_json(const report::Cell& cell, const nlohmann::json& value) {
  if (const auto* real = std::get_if<double>(&cell)) {
    if (value.is_string()) return same_cell(cell, value.get<std::string>());
    const double parsed = value.get<double>();
    return std::memcmp(&parsed, real, sizeof(double)) == 0;
  }
  if (const auto* integer = std::get_if<std::int64_t>(&cell)) return value.get<std::int64_t>() == *integer;
  return value.get<std::string>() == std::get<std::string>(cell);
}

Outcome determinism_and_serialization() {
  std::ostringstream first_out;
  std::ostringstream second_out;
  std::ostringstream sink;
  const std::vector<std::string> args{"verify", "all", "--seed", "42"};
  const int first = harness::run_cli(args, first_out, sink);
  const int second = harness::run_cli(args, second_out, sink);
  const bool identical = first_out.str() == second_out.str() && first == second;

  harness::SweepConfig config;
  config.sigma_grid = {0.3, 0.5, 0.7};
  config.t_values = {14.134725, -3.5};
  config.n_list = {1, 10, 1000};
  std::vector<report::Table> tables{
      harness::to_table(harness::run_diag(config)),
      harness::to_table(harness::run_zeros(10.0, 30.0, 0.1)),
      harness::to_table(harness::run_sweep_u({0.1, 0.5, 0.9}, 14.134725, 500)),
      harness::to_table({harness::run_eval({0.5, 14.134725}, "eta"),
                         harness::run_eval({2.0, 0.0}, "gamma")})};
  std::size_t cells = 0;
  bool lossless = true;
  for (const auto& table : tables) {
    const auto csv = report::parse_csv(report::to_string(table, report::Format::Csv));
    const auto json = nlohmann::json::parse(report::to_string(table, report::Format::Json));
    lossless = lossless && csv.columns == table.columns && csv.rows.size() == table.rows.size() &&
               json.size() == table.rows.size();
    for (std::size_t r = 0; lossless && r < table.rows.size(); ++r) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        lossless = lossless && same_cell(table.rows[r][c], csv.rows[r][c]) &&
                   same_json(table.rows[r][c], json[r][table.columns[c]]);
        ++cells;
      }
    }
  }
  return {identical && first == 0 && lossless,
          std::string("verify summaries ") + (identical ? "identical" : "DIFFER") + ", exit " +
              std::to_string(first) + "; " + std::to_string(cells) + " cells round-tripped " +
              (lossless ? "losslessly" : "with LOSS")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "combined-sum identity", 60.0, combined_sum_identity},
      {2, "fast/brute cross-term equivalence", 60.0, fast_brute_equivalence},
      {3, "known values", 1.0, known_values},
      {4, "functional equation", 10.0, functional_equation},
      {5, "first three critical-line zeros", 30.0, first_three_zeros},
      {6, "zero equivalence and factor-zero boundary", 5.0, zero_equivalence},
      {7, "critical-line divergence diagnostic", 120.0, critical_line_divergence},
      {8, "off-line constant and stabilization", 30.0, off_line_case},
      {9, "determinism and serialization", 5.0, determinism_and_serialization},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.number) == selected.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= criterion.budget_seconds;
    const bool passed = outcome.passed && in_budget;
    if (!passed) ++failures;
    std::printf("%s criterion %d: %s | %s | %.2f s (budget %.0f s%s)\n", passed ? "PASS" : "FAIL",
                criterion.number, criterion.title.c_str(), outcome.detail.c_str(), seconds,
                criterion.budget_seconds, in_budget ? "" : ", EXCEEDED");
    std::fflush(stdout);
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
