#pragma once

// Experiment front end: turns configurations into report rows and drives the
// command line. Everything here is deterministic in (config, seed); wall-clock
// timings are only recorded when explicitly requested.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zetalab/diagnostics.hpp"
#include "zetalab/report.hpp"
#include "zetalab/series_core.hpp"
#include "zetalab/zero_finder.hpp"

namespace zetalab::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitVerifyFailed = 3,
};

/// Thrown for malformed command lines and configurations (exit code 1).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "2", "0.5+14.134725i", "1-2.5e1i", "3i". Empty on malformed text.
std::optional<Complex> parse_complex(std::string_view text);

/// Comma-separated list of reals.
std::vector<double> parse_real_list(std::string_view text);
/// Comma-separated list of integers; "1e3"-style literals are accepted when
/// they denote an exact integer.
std::vector<std::int64_t> parse_int_list(std::string_view text);
/// "start:stop:step" (stop included when hit) or a comma-separated list.
std::vector<double> parse_grid(std::string_view text);

struct SweepConfig {
  std::string experiment_id = "diag";
  std::vector<double> sigma_grid;
  std::vector<double> t_values;
  std::vector<std::int64_t> n_list;
  std::string output_path;  // empty: standard output
  report::Format format = report::Format::Csv;
  std::uint64_t seed = 42;
  diagnostics::BrutePolicy brute = diagnostics::BrutePolicy::Auto;

  /// Throws UsageError: grids non-empty, n_list strictly increasing within
  /// [1, 10^7], 0 < sigma < 1, |t| <= 100.
  void validate() const;
};

enum class Preset { CaseCritical, CaseUpper, CaseLower };

std::optional<Preset> parse_preset(std::string_view name);
std::string_view to_string(Preset preset) noexcept;

/// critical: sigma = 1/2 at the first zero ordinate; upper: sigma in
/// {0.6, 0.7, 0.8}; lower: sigma in {0.2, 0.3, 0.4}. All use the first zero
/// ordinate and N = 10^2 .. 10^6 by decades.
SweepConfig preset_config(Preset preset);

/// Ordinate of the first critical-line zero, located by scan_zeros.
double first_zero_ordinate();

struct EvalResult {
  std::string what;
  Complex value;
  std::int64_t n_terms = 0;
  std::string method;
  double error_estimate = 0.0;
};

struct ZeroRow {
  zeros::ZeroCandidate candidate;
  zeros::EquivalenceReport equivalence;
  zeros::SymmetryReport symmetry;
};

struct SweepRow {
  std::int64_t n_terms = 0;
  double u = 0.0;
  double value = 0.0;
  double delta = 0.0;  // F(u_i) - F(u_{i-1}); nan on the first row
};

struct ReportRow {
  std::string experiment_id;
  StripPoint s;
  std::variant<diagnostics::DiagnosticRecord, ZeroRow, SweepRow, EvalResult> record;
  std::int64_t wall_time_ms = 0;
};

/// Fixed column order per record kind; all rows must share a kind.
std::vector<std::string> columns_for(const ReportRow& row);
std::vector<report::Cell> cells_for(const ReportRow& row);
report::Table to_table(const std::vector<ReportRow>& rows);

std::vector<ReportRow> run_diag(const SweepConfig& config, bool timing = false);
std::vector<ReportRow> run_zeros(double t_lo, double t_hi, double step, bool timing = false);
std::vector<ReportRow> run_sweep_u(const std::vector<double>& grid, double t,
                                   std::int64_t n_terms, bool timing = false);
/// what: eta | zeta | gamma | functional-residual.
ReportRow run_eval(Complex s, std::string_view what, double tol = 1e-12, bool timing = false);

/// One curve of plot-ready data: ln N against T_N for each diag point, u
/// against F_N for a sweep. Zero and eval rows give no curves.
struct PlotSeries {
  std::string name;     // file stem, unique within one run
  std::string caption;  // written as a leading comment line
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

std::vector<PlotSeries> plot_series(const std::vector<ReportRow>& rows);

/// Whitespace-separated two-column text with '#' comment lines.
std::string format_plot(const PlotSeries& series);

enum class Suite { Identity, Functional, Equivalence, All };

std::optional<Suite> parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  std::int64_t count = 0;
  std::int64_t failures = 0;
  double worst = 0.0;
  double threshold = 0.0;
  bool passed() const noexcept { return failures == 0; }
};

std::vector<CheckResult> run_verify(Suite suite, std::uint64_t seed);
std::string format_verify_summary(Suite suite, std::uint64_t seed,
                                  const std::vector<CheckResult>& checks);

/// Entry point behind the `zetalab` executable. `args` excludes the program
/// name. Never throws; returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetalab::harness
