#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zetalab/errors.hpp"
#include "zetalab/harness.hpp"

namespace zetalab::harness {

namespace {

// Largest (grid points x terms) product a single sweep may request.
constexpr double kMaxSweepWork = 2e8;

class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;
  std::string plot_dir;
  bool timing = false;

  report::Format parsed_format() const {
    const auto parsed = report::parse_format(format);
    if (!parsed) throw UsageError("--format must be csv or json");
    return *parsed;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text, std::ios::openmode mode) {
  std::ofstream file(path, std::ios::binary | mode);
  if (!file) throw OutputError("cannot open output file: " + path);
  file << text;
  file.flush();
  if (!file) throw OutputError("failed writing output file: " + path);
}

// Emits the table to stdout or replaces the output file.
void emit(const report::Table& table, const OutputOptions& options, std::ostream& out) {
  const auto format = options.parsed_format();
  if (options.path.empty()) {
    report::write(table, format, out);
    return;
  }
  write_file(options.path, report::to_string(table, format), std::ios::trunc);
}

// Appends rows to an existing artifact of the same shape, or starts one.
void append(const report::Table& table, const OutputOptions& options, std::ostream& out) {
  const auto format = options.parsed_format();
  if (options.path.empty()) {
    report::write(table, format, out);
    return;
  }
  const std::string existing = read_file(options.path);
  if (format == report::Format::Json) {
    std::string merged;
    try {
      merged = report::append_json_rows(existing, table);
    } catch (const InvalidArgument& e) {
      throw OutputError(std::string(e.what()) + ": " + options.path);
    }
    write_file(options.path, merged, std::ios::trunc);
    return;
  }
  if (existing.find_first_not_of(" \t\r\n") == std::string::npos) {
    write_file(options.path, report::to_string(table, format), std::ios::trunc);
    return;
  }
  std::ostringstream header;
  report::write_csv(report::Table{table.columns, {}}, header);
  if (existing.compare(0, header.str().size(), header.str()) != 0) {
    throw OutputError("existing file has a different header: " + options.path);
  }
  std::ostringstream rows;
  if (existing.back() != '\n') rows << '\n';
  report::write_csv(table, rows, false);
  write_file(options.path, rows.str(), std::ios::app);
}

// Writes one two-column file per curve into --plot-dir, when given.
void emit_plots(const std::vector<ReportRow>& rows, const OutputOptions& options) {
  if (options.plot_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(options.plot_dir, ec);
  if (ec) throw OutputError("cannot create plot directory: " + options.plot_dir);
  for (const auto& curve : plot_series(rows)) {
    const auto path = std::filesystem::path(options.plot_dir) / (curve.name + ".dat");
    write_file(path.string(), format_plot(curve), std::ios::trunc);
  }
}

std::string format_complex(Complex z) {
  std::string text = report::format_double(z.real());
  text += std::signbit(z.imag()) ? " - " : " + ";
  text += report::format_double(std::abs(z.imag()));
  text += "i";
  return text;
}

Complex require_complex(const std::string& text) {
  const auto parsed = parse_complex(text);
  if (!parsed) throw UsageError("malformed complex literal: '" + text + "'");
  return *parsed;
}

double require_real(const std::string& text, const char* what) {
  const auto values = parse_real_list(text);
  if (values.size() != 1) throw UsageError(std::string(what) + " takes a single real value");
  return values.front();
}

std::int64_t require_int(const std::string& text, const char* what) {
  const auto values = parse_int_list(text);
  if (values.size() != 1) throw UsageError(std::string(what) + " takes a single integer");
  return values.front();
}

void require_envelope_t(double t) {
  if (!(std::abs(t) <= series::kEnvelopeMaxAbsT)) {
    throw UsageError("t must satisfy |t| <= 100");
  }
}

void require_work(double grid_points, double n_terms) {
  if (grid_points * n_terms > kMaxSweepWork) {
    throw UsageError("requested sweep is too large (grid points x N > 2e8)");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for the Dirichlet eta and Riemann zeta functions"};
  app.name("zetalab");
  app.require_subcommand(1);

  OutputOptions output;
  std::uint64_t seed = 42;
  app.add_option("--format", output.format, "csv or json")->capture_default_str();
  app.add_option("--out", output.path, "output file (default: standard output)");
  app.add_option("--seed", seed, "seed for the randomized property suites")
      ->capture_default_str();
  app.add_option("--plot-dir", output.plot_dir,
                 "directory for two-column plot data (diag, sweep-u)");
  app.add_flag("--timing", output.timing, "record wall-clock times (default: 0)");

  auto* eval = app.add_subcommand("eval", "evaluate one function at one point")->fallthrough();
  std::string eval_s;
  std::string eval_what = "zeta";
  std::string eval_tol = "1e-12";
  eval->add_option("--s", eval_s, "complex argument, e.g. 0.5+14.134725i")->required();
  eval->add_option("--what", eval_what, "eta, zeta, gamma or functional-residual")
      ->capture_default_str();
  eval->add_option("--tol", eval_tol, "target accuracy for eta")->capture_default_str();

  auto* diag = app.add_subcommand("diag", "power-sum / cross-term diagnostics")->fallthrough();
  std::string diag_preset;
  std::string diag_sigma;
  std::string diag_t;
  std::string diag_n;
  bool diag_no_brute = false;
  diag->add_option("--preset", diag_preset, "case-critical, case-upper or case-lower");
  diag->add_option("--sigma-grid", diag_sigma, "sigma values (list or start:stop:step)");
  diag->add_option("--t", diag_t, "t values (comma-separated)");
  diag->add_option("--n-list", diag_n, "strictly increasing N values");
  diag->add_flag("--no-brute", diag_no_brute, "always use the fast cross-term");

  auto* zeros_cmd = app.add_subcommand("zeros", "critical-line zeros on a t range")->fallthrough();
  std::vector<std::string> zeros_positional;
  std::string zeros_lo;
  std::string zeros_hi;
  std::string zeros_step;
  zeros_cmd->add_option("range", zeros_positional, "t_lo t_hi [step]")->expected(0, 3);
  zeros_cmd->add_option("--t-lo", zeros_lo, "lower end of the scan");
  zeros_cmd->add_option("--t-hi", zeros_hi, "upper end of the scan");
  zeros_cmd->add_option("--step", zeros_step, "scan step (default 0.1)");

  auto* sweep = app.add_subcommand("sweep-u", "cross-term as a function of sigma")->fallthrough();
  std::string sweep_t;
  std::string sweep_n;
  std::string sweep_grid;
  sweep->add_option("--t", sweep_t, "imaginary part")->required();
  sweep->add_option("--n,--n-list", sweep_n, "number of terms")->required();
  sweep->add_option("--grid", sweep_grid, "u values inside (0, 1)")->required();

  auto* verify = app.add_subcommand("verify", "run a property suite")->fallthrough();
  std::string verify_suite = "all";
  verify->add_option("suite", verify_suite, "identity, functional, equivalence or all")
      ->capture_default_str();

  bool library_invalid_is_domain = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (eval->parsed()) {
      library_invalid_is_domain = true;
      const Complex s = require_complex(eval_s);
      const double tol = require_real(eval_tol, "--tol");
      if (!(tol > 0.0)) throw UsageError("--tol must be positive");
      const auto row = run_eval(s, eval_what, tol, output.timing);
      const auto& result = std::get<EvalResult>(row.record);
      out << eval_what << '(' << format_complex(s) << ") = " << format_complex(result.value)
          << "  |value| = " << report::format_double(std::abs(result.value))
          << "  method = " << result.method << '\n';
      append(to_table({row}), output, out);
      return kExitOk;
    }

    if (diag->parsed()) {
      SweepConfig config;
      if (!diag_preset.empty()) {
        const auto preset = parse_preset(diag_preset);
        if (!preset) throw UsageError("unknown preset: " + diag_preset);
        config = preset_config(*preset);
      }
      if (!diag_sigma.empty()) config.sigma_grid = parse_grid(diag_sigma);
      if (!diag_t.empty()) config.t_values = parse_real_list(diag_t);
      if (!diag_n.empty()) config.n_list = parse_int_list(diag_n);
      config.output_path = output.path;
      config.format = output.parsed_format();
      config.seed = seed;
      if (diag_no_brute) config.brute = diagnostics::BrutePolicy::Never;
      config.validate();
      require_work(static_cast<double>(config.sigma_grid.size() * config.t_values.size()),
                   static_cast<double>(config.n_list.back()));
      const auto rows = run_diag(config, output.timing);
      emit(to_table(rows), output, out);
      emit_plots(rows, output);
      return kExitOk;
    }

    if (zeros_cmd->parsed()) {
      if (!zeros_positional.empty() && zeros_positional.size() < 2) {
        throw UsageError("zeros needs t_lo and t_hi");
      }
      if (!zeros_positional.empty() && (!zeros_lo.empty() || !zeros_hi.empty())) {
        throw UsageError("give the range either positionally or with --t-lo/--t-hi");
      }
      if (!zeros_positional.empty()) {
        zeros_lo = zeros_positional[0];
        zeros_hi = zeros_positional[1];
        if (zeros_positional.size() == 3) {
          if (!zeros_step.empty()) throw UsageError("step given twice");
          zeros_step = zeros_positional[2];
        }
      }
      if (zeros_lo.empty() || zeros_hi.empty()) throw UsageError("zeros needs t_lo and t_hi");
      const double lo = require_real(zeros_lo, "t_lo");
      const double hi = require_real(zeros_hi, "t_hi");
      const double step =
          zeros_step.empty() ? zeros::kDefaultScanStep : require_real(zeros_step, "step");
      if (!(lo < hi)) throw UsageError("inverted range: need t_lo < t_hi");
      emit(to_table(run_zeros(lo, hi, step, output.timing)), output, out);
      return kExitOk;
    }

    if (sweep->parsed()) {
      const double t = require_real(sweep_t, "--t");
      require_envelope_t(t);
      const std::int64_t n = require_int(sweep_n, "--n");
      const auto grid = parse_grid(sweep_grid);
      if (n < 1 || n > series::kMaxPartialTerms) throw UsageError("N must lie in [1, 10^7]");
      require_work(static_cast<double>(grid.size()), static_cast<double>(n));
      const auto rows = run_sweep_u(grid, t, n, output.timing);
      emit(to_table(rows), output, out);
      emit_plots(rows, output);
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto suite = parse_suite(verify_suite);
      if (!suite) throw UsageError("unknown suite: " + verify_suite);
      const auto checks = run_verify(*suite, seed);
      out << format_verify_summary(*suite, seed, checks);
      const bool passed = std::all_of(checks.begin(), checks.end(),
                                      [](const CheckResult& c) { return c.passed(); });
      return passed ? kExitOk : kExitVerifyFailed;
    }
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvalidArgument& e) {
    err << (library_invalid_is_domain ? "domain error: " : "usage error: ") << e.what() << '\n';
    return library_invalid_is_domain ? kExitDomain : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (...) {
    err << "error: unknown failure\n";
    return kExitUsage;
  }
}

}  // namespace zetalab::harness
