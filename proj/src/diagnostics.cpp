#include "zetalab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetalab/compensated.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/series_core.hpp"

namespace zetalab::diagnostics {

namespace {

void require_terms(std::int64_t n_terms, const char* what) {
  if (n_terms < 1) {
    throw InvalidArgument(std::string(what) + ": N must be >= 1");
  }
  if (n_terms > series::kMaxPartialTerms) {
    throw InvalidArgument(std::string(what) + ": N exceeds the 10^7 envelope");
  }
}

double abs_sq(const series::PartialSumState& state) {
  const double c = state.cos_sum();
  const double s = state.sin_sum();
  return c * c + s * s;
}

}  // namespace

std::string_view to_string(CrossTermSource source) noexcept {
  return source == CrossTermSource::Brute ? "brute" : "fast";
}

double power_sum(double sigma, std::int64_t n_terms) {
  require_terms(n_terms, "power_sum");
  if (!(sigma > 0.0)) throw InvalidArgument("power_sum: sigma must be > 0");
  CompensatedSum<double> acc;
  for (std::int64_t k = 1; k <= n_terms; ++k) {
    const double w = series::term_components(k, sigma, 0.0).weight;
    acc.add(w * w);
  }
  return acc.value();
}

double cross_term_brute(double sigma, double t, std::int64_t n_terms) {
  require_terms(n_terms, "cross_term_brute");
  if (n_terms > kBruteForceGuard) {
    throw CostGuardError("cross_term_brute: N = " + std::to_string(n_terms) +
                         " exceeds the brute-force guard of " +
                         std::to_string(kBruteForceGuard) + "; use cross_term_fast");
  }
  const auto n = static_cast<std::size_t>(n_terms);
  std::vector<double> signed_weight(n + 1);
  std::vector<double> phase(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto term = series::term_components(static_cast<std::int64_t>(k), sigma, t);
    signed_weight[k] = (k % 2 == 0) ? term.weight : -term.weight;  // (-1)^k k^-sigma
    phase[k] = term.phase;
  }

  CompensatedSum<double> total;
  for (std::size_t outer = 2; outer <= n; ++outer) {
    CompensatedSum<double> inner;
    const double outer_phase = phase[outer];
    for (std::size_t k = 1; k < outer; ++k) {
      inner.add(signed_weight[k] * std::cos(phase[k] - outer_phase));
    }
    total.add(signed_weight[outer] * inner.value());
  }
  return total.value();
}

double cross_term_fast(double sigma, double t, std::int64_t n_terms) {
  require_terms(n_terms, "cross_term_fast");
  const auto partial = series::eta_partial(Complex(sigma, t), n_terms);
  return (abs_sq(partial.state) - partial.state.power_sum()) / 2.0;
}

std::vector<DiagnosticRecord> diagnostic_series(const StripPoint& s,
                                                std::span<const std::int64_t> n_list,
                                                BrutePolicy brute) {
  require_open_strip(s, "diagnostic_series");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    require_terms(n_list[i], "diagnostic_series");
    if (i > 0 && n_list[i] <= n_list[i - 1]) {
      throw InvalidArgument("diagnostic_series: N list must be strictly increasing");
    }
  }
  if (brute == BrutePolicy::Always && !n_list.empty() && n_list.back() > kBruteForceGuard) {
    throw CostGuardError("diagnostic_series: brute path requested above the guard");
  }

  std::vector<DiagnosticRecord> records;
  records.reserve(n_list.size());
  series::PartialSumState state{s};
  for (const auto n : n_list) {
    state.advance_to(n);
    DiagnosticRecord record;
    record.n_terms = n;
    record.power_sum = state.power_sum();
    record.eta_abs_sq = abs_sq(state);
    record.cross_term_fast = (record.eta_abs_sq - record.power_sum) / 2.0;
    record.t_is_zero = (s.t == 0.0);

    const bool use_brute = brute == BrutePolicy::Always ||
                           (brute == BrutePolicy::Auto && n <= kBruteForceGuard);
    if (use_brute) {
      record.cross_term = cross_term_brute(s.sigma, s.t, n);
      record.source = CrossTermSource::Brute;
    } else {
      record.cross_term = record.cross_term_fast;
      record.source = CrossTermSource::Fast;
    }
    record.combined_sum = record.power_sum + 2.0 * record.cross_term;
    record.identity_residual = std::abs(record.combined_sum - record.eta_abs_sq);
    records.push_back(record);
  }
  return records;
}

ConvergenceProfile convergence_profile(const StripPoint& s,
                                       std::span<const double> epsilons,
                                       double check_factor, std::int64_t budget) {
  require_open_strip(s, "convergence_profile");
  if (epsilons.empty()) {
    throw InvalidArgument("convergence_profile: epsilon list is empty");
  }
  for (const double eps : epsilons) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw InvalidArgument("convergence_profile: epsilons must be positive and finite");
    }
  }
  if (!(check_factor >= 1.0) || !std::isfinite(check_factor)) {
    throw InvalidArgument("convergence_profile: check_factor must be >= 1");
  }
  if (budget < 1) throw InvalidArgument("convergence_profile: budget must be >= 1");
  const double horizon_d = std::floor(check_factor * static_cast<double>(budget));
  if (horizon_d > static_cast<double>(series::kMaxPartialTerms)) {
    throw InvalidArgument("convergence_profile: check_factor * budget exceeds the 10^7 envelope");
  }
  const auto horizon = static_cast<std::int64_t>(horizon_d);

  // deviation[M] = max(|Re eta_M|, |Im eta_M|), M = 1..horizon
  std::vector<double> deviation(static_cast<std::size_t>(horizon) + 1, 0.0);
  series::PartialSumState state{s};
  for (std::int64_t m = 1; m <= horizon; ++m) {
    state.advance();
    deviation[static_cast<std::size_t>(m)] =
        std::max(std::abs(state.cos_sum()), std::abs(state.sin_sum()));
  }

  std::vector<double> sorted(epsilons.begin(), epsilons.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  ConvergenceProfile profile{s, check_factor, budget, {}};
  std::vector<std::int64_t> next_bad(static_cast<std::size_t>(horizon) + 2);
  for (const double eps : sorted) {
    // next_bad[M]: first index >= M where the threshold is violated.
    next_bad[static_cast<std::size_t>(horizon) + 1] = horizon + 1;
    for (std::int64_t m = horizon; m >= 1; --m) {
      const auto i = static_cast<std::size_t>(m);
      next_bad[i] = deviation[i] >= eps ? m : next_bad[i + 1];
    }
    ConvergenceEntry entry;
    entry.epsilon = eps;
    for (std::int64_t n = 1; n <= budget; ++n) {
      const auto hi = static_cast<std::int64_t>(
          std::floor(check_factor * static_cast<double>(n)));
      if (next_bad[static_cast<std::size_t>(n)] > hi) {
        entry.n_of_epsilon = n;
        entry.window_lo = n;
        entry.window_hi = hi;
        break;
      }
    }
    profile.entries.push_back(entry);
  }
  return profile;
}

CAlphaResult c_alpha(double sigma) {
  if (!(sigma > 0.5 && sigma < 1.0)) {
    throw InvalidArgument("c_alpha: sigma must lie in the open interval (1/2, 1)");
  }
  const auto zeta = series::zeta_from_eta(Complex(2.0 * sigma, 0.0));
  const double value = zeta.value.real();
  return {sigma, value, value > 1.0, zeta.error_estimate};
}

std::vector<SweepSample> cross_term_sweep(std::span<const double> u_grid, double t,
                                          std::int64_t n_terms) {
  require_terms(n_terms, "cross_term_sweep");
  std::vector<double> grid(u_grid.begin(), u_grid.end());
  for (const double u : grid) {
    if (!(u > 0.0 && u < 1.0)) {
      throw InvalidArgument("cross_term_sweep: grid values must lie in (0, 1)");
    }
  }
  std::sort(grid.begin(), grid.end());
  std::vector<SweepSample> samples;
  samples.reserve(grid.size());
  for (const double u : grid) samples.push_back({u, cross_term_fast(u, t, n_terms)});
  return samples;
}

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw InvalidArgument("least_squares_slope: need two equally sized series of length >= 2");
  }
  const auto n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
  }
  if (sxx == 0.0) throw InvalidArgument("least_squares_slope: xs are all equal");
  return sxy / sxx;
}

}  // namespace zetalab::diagnostics
