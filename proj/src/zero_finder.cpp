#include "zetalab/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <thread>

#include "zetalab/errors.hpp"
#include "zetalab/series_core.hpp"

namespace zetalab::zeros {

namespace {

constexpr std::size_t kMaxScanPoints = 1'000'000;

Complex critical_point(double t) { return {0.5, t}; }

// Evaluates Z on every grid point. Sub-ranges run on separate threads and
// write into their own slots, so the result does not depend on scheduling.
std::vector<double> evaluate_grid(const std::vector<double>& grid) {
  std::vector<double> values(grid.size());
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, grid.size() / 64));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = hardy_z(grid[i]);
    return values;
  }
  const std::size_t chunk = (grid.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
    const std::size_t end = std::min(grid.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&grid, &values, begin, end] {
      for (std::size_t i = begin; i < end; ++i) values[i] = hardy_z(grid[i]);
    }));
  }
  for (auto& job : jobs) job.get();
  return values;
}

ZeroCandidate refine(double lo, double z_lo, double hi) {
  ZeroCandidate candidate;
  double refined = 0.0;
  bool exact = false;
  int iterations = 0;
  while (hi - lo >= kBisectionWidth) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const double z_mid = hardy_z(mid);
    ++iterations;
    if (z_mid == 0.0) {
      refined = mid;
      exact = true;
      break;
    }
    if (std::signbit(z_mid) == std::signbit(z_lo)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  if (!exact) refined = lo + (hi - lo) / 2.0;

  candidate.bracket = {lo, hi};
  candidate.refined_t = refined;
  candidate.iterations = iterations;
  candidate.z_residual = std::abs(hardy_z(refined));
  const Complex s = critical_point(refined);
  candidate.eta_residual =
      std::abs(series::eta_accelerated(s, series::ZetaOptions{}.eta_tolerance).value);
  candidate.zeta_residual = std::abs(series::zeta_from_eta(s).value);
  return candidate;
}

}  // namespace

std::string_view to_string(ThetaMethod method) noexcept {
  return method == ThetaMethod::Asymptotic ? "asymptotic" : "log-gamma";
}

std::string_view to_string(EquivalenceVerdict verdict) noexcept {
  switch (verdict) {
    case EquivalenceVerdict::BothZero:
      return "both-zero";
    case EquivalenceVerdict::NeitherZero:
      return "neither-zero";
    case EquivalenceVerdict::FactorZeroBoundary:
      return "factor-zero-boundary";
    case EquivalenceVerdict::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

double theta_log_gamma(double t) {
  if (t == 0.0) throw InvalidArgument("theta_log_gamma: t = 0 rejected");
  return series::log_gamma(Complex(0.25, t / 2.0)).imag() -
         t * std::log(std::numbers::pi) / 2.0;
}

double theta_asymptotic(double t) {
  if (t == 0.0) throw InvalidArgument("theta_asymptotic: t = 0 rejected");
  const double a = std::abs(t);
  const double value = a / 2.0 * std::log(a / (2.0 * std::numbers::pi)) - a / 2.0 -
                       std::numbers::pi / 8.0 + 1.0 / (48.0 * a) +
                       7.0 / (5760.0 * a * a * a);
  return t < 0.0 ? -value : value;
}

ThetaValue theta_rs(double t) {
  if (t == 0.0 || !std::isfinite(t)) {
    throw InvalidArgument("theta_rs: t must be finite and non-zero");
  }
  // Evaluate at |t| and restore the sign: theta is odd.
  const double a = std::abs(t);
  const double sign = t < 0.0 ? -1.0 : 1.0;
  if (a >= kThetaAsymptoticFrom) {
    return {t, sign * theta_asymptotic(a), ThetaMethod::Asymptotic};
  }
  return {t, sign * theta_log_gamma(a), ThetaMethod::LogGamma};
}

double hardy_z(double t) {
  const double theta = theta_rs(t).theta;
  const Complex zeta = series::zeta_from_eta(critical_point(t)).value;
  const Complex rotated = Complex(std::cos(theta), std::sin(theta)) * zeta;
  if (std::abs(rotated.imag()) >= kHardyImagTolerance) {
    throw ConsistencyError("hardy_z: e^{i theta} zeta(1/2 + it) is not real at t = " +
                           std::to_string(t));
  }
  return rotated.real();
}

std::vector<ZeroCandidate> scan_zeros(double t_lo, double t_hi, double step) {
  if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || !std::isfinite(step)) {
    throw InvalidArgument("scan_zeros: range and step must be finite");
  }
  if (!(t_lo > 0.0) || !(t_lo < t_hi)) {
    throw InvalidArgument("scan_zeros: need 0 < t_lo < t_hi");
  }
  if (!(step > 0.0)) throw InvalidArgument("scan_zeros: step must be positive");
  if (t_hi > series::kEnvelopeMaxAbsT) {
    throw InvalidArgument("scan_zeros: t_hi beyond the |t| <= 100 envelope");
  }
  const double intervals = std::floor((t_hi - t_lo) / step);
  if (intervals + 2.0 > static_cast<double>(kMaxScanPoints)) {
    throw InvalidArgument("scan_zeros: step too fine for the range");
  }

  std::vector<double> grid;
  const auto count = static_cast<std::size_t>(intervals);
  grid.reserve(count + 2);
  for (std::size_t i = 0; i <= count; ++i) {
    grid.push_back(t_lo + static_cast<double>(i) * step);
  }
  if (grid.back() < t_hi) grid.push_back(t_hi);

  const auto values = evaluate_grid(grid);

  std::vector<ZeroCandidate> candidates;
  std::size_t last = grid.size();  // last index with Z != 0
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) continue;
    if (last != grid.size() && std::signbit(values[last]) != std::signbit(values[i])) {
      candidates.push_back(refine(grid[last], values[last], grid[i]));
    }
    last = i;
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const ZeroCandidate& a, const ZeroCandidate& b) { return a.refined_t < b.refined_t; });
  return candidates;
}

EquivalenceReport verify_zero_equivalence(const StripPoint& s) {
  if (!(s.in_open_strip() || s.sigma == 1.0)) {
    throw InvalidArgument("verify_zero_equivalence: need 0 < sigma < 1 or sigma == 1");
  }
  const series::ZetaOptions options;
  const Complex z = s.value();
  EquivalenceReport report;
  report.s = s;
  report.eta_abs = std::abs(series::eta_accelerated(z, options.eta_tolerance).value);
  report.zeta_abs = std::abs(series::zeta_from_eta(z, options).value);
  report.factor_abs = std::abs(series::factor_info(z).factor);
  report.eta_is_zero = report.eta_abs < kZeroThreshold;
  report.zeta_is_zero = report.zeta_abs < kZeroThreshold;

  const bool zeta_scaled_small = report.zeta_abs * report.factor_abs < kZeroThreshold;
  report.eta_zero_implies_zeta_zero = !report.eta_is_zero || zeta_scaled_small;
  report.zeta_zero_implies_eta_zero = !zeta_scaled_small || report.eta_is_zero;

  if (report.factor_abs < options.switch_threshold) {
    report.verdict = EquivalenceVerdict::FactorZeroBoundary;
  } else if (report.eta_is_zero && report.zeta_is_zero) {
    report.verdict = EquivalenceVerdict::BothZero;
  } else if (report.eta_abs > kNonZeroThreshold && report.zeta_abs > kNonZeroThreshold) {
    report.verdict = EquivalenceVerdict::NeitherZero;
  } else {
    report.verdict = EquivalenceVerdict::Indeterminate;
  }
  return report;
}

SymmetryReport check_symmetry(const ZeroCandidate& candidate) {
  const Complex s = critical_point(candidate.refined_t);
  const Complex reflected = 1.0 - s;
  SymmetryReport report;
  report.refined_t = candidate.refined_t;
  report.original_residual = std::abs(series::zeta_from_eta(s).value);
  report.conjugate_residual = std::abs(series::zeta_from_eta(std::conj(s)).value);
  report.reflected_residual = std::abs(series::zeta_from_eta(reflected).value);
  report.reflection_is_conjugate = (reflected == std::conj(s));
  report.passed = report.conjugate_residual < kZeroThreshold &&
                  report.reflected_residual < kZeroThreshold;
  return report;
}

double conjugate_modulus_gap(const StripPoint& s) {
  const Complex z = s.value();
  return std::abs(std::abs(series::zeta(z).value) - std::abs(series::zeta(std::conj(z)).value));
}

}  // namespace zetalab::zeros
