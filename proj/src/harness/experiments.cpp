#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/harness.hpp"

namespace zetalab::harness {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(Clock::now()) {}
  std::int64_t elapsed_ms() const {
    if (!enabled_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

private:
  bool enabled_;
  Clock::time_point start_;
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ColumnVisitor {
  std::vector<std::string> operator()(const diagnostics::DiagnosticRecord&) const {
    return {"experiment_id", "sigma", "t", "N", "P_N", "T_N", "S_N",
            "eta_abs_sq", "identity_residual", "extra", "wall_time_ms"};
  }
  std::vector<std::string> operator()(const ZeroRow&) const {
    return {"experiment_id", "sigma", "t", "bracket_lo", "bracket_hi",
            "z_residual", "eta_residual", "zeta_residual", "factor_abs", "verdict",
            "conjugate_residual", "reflection_is_conjugate", "iterations", "wall_time_ms"};
  }
  std::vector<std::string> operator()(const SweepRow&) const {
    return {"experiment_id", "u", "t", "N", "F_N", "delta_F", "wall_time_ms"};
  }
  std::vector<std::string> operator()(const EvalResult&) const {
    return {"experiment_id", "sigma", "t", "what", "re", "im", "abs",
            "n_terms", "method", "error_estimate", "wall_time_ms"};
  }
};

}  // namespace

void SweepConfig::validate() const {
  if (sigma_grid.empty()) throw UsageError("sigma grid is empty");
  if (t_values.empty()) throw UsageError("t list is empty");
  if (n_list.empty()) throw UsageError("N list is empty");
  for (const double sigma : sigma_grid) {
    if (!(sigma > 0.0 && sigma < 1.0)) {
      throw UsageError("sigma grid values must lie in the open strip (0, 1)");
    }
  }
  for (const double t : t_values) {
    if (!(std::abs(t) <= series::kEnvelopeMaxAbsT)) {
      throw UsageError("t values must satisfy |t| <= 100");
    }
  }
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || n_list[i] > series::kMaxPartialTerms) {
      throw UsageError("N values must lie in [1, 10^7]");
    }
    if (i > 0 && n_list[i] <= n_list[i - 1]) {
      throw UsageError("N list must be strictly increasing");
    }
  }
}

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "case-critical") return Preset::CaseCritical;
  if (name == "case-upper") return Preset::CaseUpper;
  if (name == "case-lower") return Preset::CaseLower;
  return std::nullopt;
}

std::string_view to_string(Preset preset) noexcept {
  switch (preset) {
    case Preset::CaseCritical:
      return "case-critical";
    case Preset::CaseUpper:
      return "case-upper";
    case Preset::CaseLower:
      return "case-lower";
  }
  return "case-critical";
}

double first_zero_ordinate() {
  const auto candidates = zeros::scan_zeros(14.0, 15.0, zeros::kDefaultScanStep);
  if (candidates.empty()) throw ConsistencyError("first zero not found on [14, 15]");
  return candidates.front().refined_t;
}

SweepConfig preset_config(Preset preset) {
  SweepConfig config;
  config.experiment_id = std::string(to_string(preset));
  config.t_values = {first_zero_ordinate()};
  config.n_list = {100, 1'000, 10'000, 100'000, 1'000'000};
  switch (preset) {
    case Preset::CaseCritical:
      config.sigma_grid = {0.5};
      break;
    case Preset::CaseUpper:
      config.sigma_grid = {0.6, 0.7, 0.8};
      break;
    case Preset::CaseLower:
      config.sigma_grid = {0.2, 0.3, 0.4};
      break;
  }
  return config;
}

std::vector<std::string> columns_for(const ReportRow& row) {
  return std::visit(ColumnVisitor{}, row.record);
}

std::vector<report::Cell> cells_for(const ReportRow& row) {
  using report::Cell;
  const auto& id = row.experiment_id;
  const auto ms = row.wall_time_ms;
  if (const auto* r = std::get_if<diagnostics::DiagnosticRecord>(&row.record)) {
    return {Cell{id}, Cell{row.s.sigma}, Cell{row.s.t}, Cell{r->n_terms},
            Cell{r->power_sum}, Cell{r->cross_term}, Cell{r->combined_sum},
            Cell{r->eta_abs_sq}, Cell{r->identity_residual},
            Cell{r->cross_term + r->power_sum / 2.0}, Cell{ms}};
  }
  if (const auto* z = std::get_if<ZeroRow>(&row.record)) {
    return {Cell{id},
            Cell{row.s.sigma},
            Cell{row.s.t},
            Cell{z->candidate.bracket.first},
            Cell{z->candidate.bracket.second},
            Cell{z->candidate.z_residual},
            Cell{z->candidate.eta_residual},
            Cell{z->candidate.zeta_residual},
            Cell{z->equivalence.factor_abs},
            Cell{std::string(zeros::to_string(z->equivalence.verdict))},
            Cell{z->symmetry.conjugate_residual},
            Cell{std::int64_t{z->symmetry.reflection_is_conjugate ? 1 : 0}},
            Cell{std::int64_t{z->candidate.iterations}},
            Cell{ms}};
  }
  if (const auto* w = std::get_if<SweepRow>(&row.record)) {
    return {Cell{id}, Cell{w->u}, Cell{row.s.t}, Cell{w->n_terms},
            Cell{w->value}, Cell{w->delta}, Cell{ms}};
  }
  const auto& e = std::get<EvalResult>(row.record);
  return {Cell{id}, Cell{row.s.sigma}, Cell{row.s.t}, Cell{e.what},
          Cell{e.value.real()}, Cell{e.value.imag()}, Cell{std::abs(e.value)},
          Cell{e.n_terms}, Cell{e.method}, Cell{e.error_estimate}, Cell{ms}};
}

report::Table to_table(const std::vector<ReportRow>& rows) {
  report::Table table;
  if (rows.empty()) return table;
  table.columns = columns_for(rows.front());
  for (const auto& row : rows) {
    if (row.record.index() != rows.front().record.index()) {
      throw InvalidArgument("to_table: rows of different kinds");
    }
    table.rows.push_back(cells_for(row));
  }
  return table;
}

std::vector<ReportRow> run_diag(const SweepConfig& config, bool timing) {
  config.validate();
  std::vector<ReportRow> rows;
  for (const double sigma : config.sigma_grid) {
    for (const double t : config.t_values) {
      const Stopwatch watch(timing);
      const StripPoint s{sigma, t};
      const auto records = diagnostics::diagnostic_series(s, config.n_list, config.brute);
      const auto elapsed = watch.elapsed_ms();
      for (const auto& record : records) {
        rows.push_back({config.experiment_id, s, record, elapsed});
      }
    }
  }
  return rows;
}

std::vector<ReportRow> run_zeros(double t_lo, double t_hi, double step, bool timing) {
  const Stopwatch watch(timing);
  const auto candidates = zeros::scan_zeros(t_lo, t_hi, step);
  std::vector<ReportRow> rows;
  for (const auto& candidate : candidates) {
    const StripPoint s{0.5, candidate.refined_t};
    ZeroRow row{candidate, zeros::verify_zero_equivalence(s), zeros::check_symmetry(candidate)};
    rows.push_back({"zeros", s, row, watch.elapsed_ms()});
  }
  return rows;
}

std::vector<ReportRow> run_sweep_u(const std::vector<double>& grid, double t,
                                   std::int64_t n_terms, bool timing) {
  const Stopwatch watch(timing);
  const auto samples = diagnostics::cross_term_sweep(grid, t, n_terms);
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    SweepRow row{n_terms, samples[i].u, samples[i].value,
                 i == 0 ? kNaN : samples[i].value - samples[i - 1].value};
    rows.push_back({"sweep-u", StripPoint{samples[i].u, t}, row, watch.elapsed_ms()});
  }
  return rows;
}

ReportRow run_eval(Complex s, std::string_view what, double tol, bool timing) {
  const Stopwatch watch(timing);
  EvalResult result;
  result.what = std::string(what);
  if (what == "eta") {
    const auto eta = series::eta_accelerated(s, tol);
    result.value = eta.value;
    result.n_terms = eta.n_terms_used;
    result.method = std::string(series::to_string(eta.method));
    result.error_estimate = eta.error_estimate;
  } else if (what == "zeta") {
    const auto zeta = series::zeta(s);
    result.value = zeta.value;
    result.n_terms = zeta.n_terms_used;
    result.method = std::string(series::to_string(zeta.method));
    result.error_estimate = zeta.error_estimate;
  } else if (what == "gamma") {
    result.value = series::gamma_complex(s);
    result.method = "lanczos";
    result.error_estimate = kNaN;
  } else if (what == "functional-residual") {
    result.value = Complex(series::functional_equation_residual(s), 0.0);
    result.method = "functional-equation";
    result.error_estimate = kNaN;
  } else {
    throw UsageError("--what must be one of eta, zeta, gamma, functional-residual");
  }
  return {"eval-" + result.what, StripPoint(s), result, watch.elapsed_ms()};
}


std::vector<PlotSeries> plot_series(const std::vector<ReportRow>& rows) {
  std::vector<PlotSeries> curves;
  const ReportRow* previous = nullptr;
  for (const auto& row : rows) {
    const bool same_point = previous != nullptr && previous->experiment_id == row.experiment_id &&
                            previous->s.sigma == row.s.sigma && previous->s.t == row.s.t;
    if (const auto* record = std::get_if<diagnostics::DiagnosticRecord>(&row.record)) {
      if (!same_point) {
        curves.push_back({row.experiment_id + "-" + std::to_string(curves.size()),
                          "sigma " + report::format_double(row.s.sigma) + " t " +
                              report::format_double(row.s.t),
                          "ln_N", "T_N", {}});
      }
      curves.back().points.emplace_back(std::log(static_cast<double>(record->n_terms)),
                                        record->cross_term);
    } else if (const auto* sample = std::get_if<SweepRow>(&row.record)) {
      if (curves.empty()) {
        curves.push_back({row.experiment_id,
                          "t " + report::format_double(row.s.t) + " N " +
                              std::to_string(sample->n_terms),
                          "u", "F_N", {}});
      }
      curves.back().points.emplace_back(sample->u, sample->value);
    }
    previous = &row;
  }
  return curves;
}

std::string format_plot(const PlotSeries& series) {
  std::string text = "# " + series.caption + "\n# " + series.x_label + " " + series.y_label + "\n";
  for (const auto& [x, y] : series.points) {
    text += report::format_double(x) + " " + report::format_double(y) + "\n";
  }
  return text;
}

}  // namespace zetalab::harness
