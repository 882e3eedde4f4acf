#pragma once

// Power sums, alternating cosine cross-terms and their combination
//
//   S_N = P_N + 2 T_N,  P_N = sum_{k<=N} k^{-2 sigma},
//   T_N = sum_{1<=k<k'<=N} (-1)^{k+k'} cos(t ln(k/k')) / (k k')^sigma,
//
// which is algebraically |eta_N(sigma + i t)|^2. The brute O(N^2) double sum
// and the O(N) route through eta_N are kept as independent computations.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zetalab/strip_point.hpp"

namespace zetalab::diagnostics {

/// Largest N accepted by cross_term_brute (about 2e8 pair evaluations).
inline constexpr std::int64_t kBruteForceGuard = 20'000;

double power_sum(double sigma, std::int64_t n_terms);

/// Pair order: outer k' ascending, inner k ascending. CostGuardError above
/// kBruteForceGuard.
double cross_term_brute(double sigma, double t, std::int64_t n_terms);

/// T_N = (|eta_N|^2 - P_N) / 2.
double cross_term_fast(double sigma, double t, std::int64_t n_terms);

enum class CrossTermSource { Fast, Brute };

std::string_view to_string(CrossTermSource source) noexcept;

struct DiagnosticRecord {
  std::int64_t n_terms = 0;
  double power_sum = 0.0;
  /// Brute value when it was computed, otherwise the fast value.
  double cross_term = 0.0;
  double combined_sum = 0.0;  // power_sum + 2 * cross_term
  double eta_abs_sq = 0.0;
  double identity_residual = 0.0;  // |combined_sum - eta_abs_sq|
  double cross_term_fast = 0.0;
  CrossTermSource source = CrossTermSource::Fast;
  /// t = 0 is outside the beta != 0 setting but accepted.
  bool t_is_zero = false;
};

enum class BrutePolicy {
  Auto,    // brute when N <= kBruteForceGuard
  Never,
  Always,  // CostGuardError for N > kBruteForceGuard
};

/// One record per N (strictly increasing, all >= 1) at a point of the open
/// strip. Partial sums are advanced incrementally across the list.
std::vector<DiagnosticRecord> diagnostic_series(const StripPoint& s,
                                                std::span<const std::int64_t> n_list,
                                                BrutePolicy brute = BrutePolicy::Auto);

struct ConvergenceEntry {
  double epsilon = 0.0;
  /// Smallest N with |Re eta_M|, |Im eta_M| < epsilon for every M in
  /// [N, floor(check_factor * N)]; empty when the budget was exhausted.
  std::optional<std::int64_t> n_of_epsilon;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
};

struct ConvergenceProfile {
  StripPoint s;
  double check_factor = 2.0;
  std::int64_t budget = 0;
  std::vector<ConvergenceEntry> entries;  // decreasing epsilon
};

inline constexpr std::int64_t kDefaultConvergenceBudget = 1'000'000;

ConvergenceProfile convergence_profile(const StripPoint& s,
                                       std::span<const double> epsilons,
                                       double check_factor = 2.0,
                                       std::int64_t budget = kDefaultConvergenceBudget);

struct CAlphaResult {
  double sigma = 0.0;
  double value = 0.0;  // zeta(2 sigma)
  bool exceeds_one = false;
  double error_estimate = 0.0;
};

/// lim P_N = zeta(2 sigma) for 1/2 < sigma < 1.
CAlphaResult c_alpha(double sigma);

struct SweepSample {
  double u = 0.0;
  double value = 0.0;  // F_N(u) = T_N at sigma = u
};

/// F_N(u) on a grid inside (0, 1), returned in increasing u.
std::vector<SweepSample> cross_term_sweep(std::span<const double> u_grid, double t,
                                          std::int64_t n_terms);

/// Ordinary least-squares slope of ys against xs.
double least_squares_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace zetalab::diagnostics
