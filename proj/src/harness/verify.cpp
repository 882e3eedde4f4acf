#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "zetalab/compensated.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/harness.hpp"

namespace zetalab::harness {

namespace {

// std::uniform_real_distribution is not pinned down across standard
// libraries, so the mapping from raw bits is done here.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

class Check {
public:
  Check(std::string name, double threshold) {
    result_.name = std::move(name);
    result_.threshold = threshold;
  }

  // Records one measurement; passes when value <= threshold. NaN fails.
  void record(double value) {
    ++result_.count;
    if (!(value <= result_.threshold)) ++result_.failures;
    if (std::isnan(value) || value > result_.worst || std::isnan(result_.worst)) {
      result_.worst = value;
    }
  }

  void record_bool(bool ok) { record(ok ? 0.0 : 1.0); }

  // Runs `body`, counting any library exception as a failure.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception&) {
      ++result_.count;
      ++result_.failures;
      result_.worst = std::numeric_limits<double>::infinity();
    }
  }

  CheckResult result() const { return result_; }

private:
  CheckResult result_;
};

double relative(double diff, double scale) { return diff / std::max(1.0, std::abs(scale)); }

StripPoint random_strip_point(Sampler& rng) {
  return {rng.uniform(0.05, 0.95), rng.uniform(-40.0, 40.0)};
}

void identity_suite(std::uint64_t seed, std::vector<CheckResult>& out) {
  Sampler rng(seed);
  Check identity("identity-residual", 1e-9);
  Check fast_brute("fast-vs-brute", 1e-9);
  Check non_negative("combined-sum-non-negative", 0.0);
  for (int i = 0; i < 100; ++i) {
    const StripPoint s = random_strip_point(rng);
    const std::int64_t n = rng.integer(1, 2000);
    identity.guarded([&] {
      const std::vector<std::int64_t> n_list{n};
      const auto record =
          diagnostics::diagnostic_series(s, n_list, diagnostics::BrutePolicy::Always).front();
      identity.record(relative(record.identity_residual, record.power_sum));
      fast_brute.record(relative(std::abs(record.cross_term_fast - record.cross_term),
                                 record.cross_term));
      non_negative.record_bool(record.eta_abs_sq >= 0.0);
    });
  }

  Check exactness("partial-sum-exactness", 1e-13);
  for (int i = 0; i < 200; ++i) {
    const StripPoint s = random_strip_point(rng);
    const std::int64_t n = rng.integer(1, 5000);
    exactness.guarded([&] {
      const auto partial = series::eta_partial(s.value(), n);
      // Single pass through the complex exponential, no shared helpers.
      CompensatedComplexSum<Complex> direct;
      for (std::int64_t k = 1; k <= n; ++k) {
        const Complex term = std::exp(-s.value() * std::log(static_cast<double>(k)));
        direct.add((k % 2 == 1) ? term : -term);
      }
      exactness.record(relative(std::abs(partial.value - direct.value()), std::abs(direct.value())));
    });
  }

  out.push_back(identity.result());
  out.push_back(fast_brute.result());
  out.push_back(non_negative.result());
  out.push_back(exactness.result());
}

void functional_suite(std::uint64_t seed, std::vector<CheckResult>& out) {
  Sampler rng(seed ^ 0x9e3779b97f4a7c15ULL);

  Check functional("functional-equation", 1e-6);
  for (int i = 0; i < 20; ++i) {
    const double sigma = rng.uniform(0.2, 0.8);
    const double t = rng.uniform(2.0, 30.0) * (rng.coin() ? 1.0 : -1.0);
    functional.guarded(
        [&] { functional.record(series::functional_equation_residual(Complex(sigma, t))); });
  }

  Check reflection("gamma-reflection", 1e-9);
  for (int i = 0; i < 50; ++i) {
    Complex s;
    do {
      const double radius = rng.uniform(0.0, 10.0);
      const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
      s = std::polar(radius, angle);
    } while (std::abs(s.imag()) < 0.05 && std::abs(s.real() - std::round(s.real())) < 0.05);
    reflection.guarded([&] {
      const Complex lhs = series::gamma_complex(s) * series::gamma_complex(1.0 - s);
      const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * s);
      reflection.record(relative(std::abs(lhs - rhs), std::abs(rhs)));
    });
  }

  constexpr double pi = std::numbers::pi;
  Check zeta_two("known-zeta-2", 1e-10);
  zeta_two.guarded([&] {
    zeta_two.record(std::abs(series::zeta_from_eta(Complex(2.0, 0.0)).value - pi * pi / 6.0));
  });
  Check eta_one("known-eta-1", 1e-12);
  eta_one.guarded([&] {
    eta_one.record(
        std::abs(series::eta_accelerated(Complex(1.0, 0.0), 1e-12).value - std::numbers::ln2));
  });
  Check gamma_half("known-gamma-half", 1e-10);
  gamma_half.guarded([&] {
    gamma_half.record(std::abs(series::gamma_complex(Complex(0.5, 0.0)) - std::sqrt(pi)));
  });

  Check conjugate("eta-conjugate-symmetry", 1e-13);
  Check doubling("acceleration-consistency", 1.0);
  for (int i = 0; i < 50; ++i) {
    const StripPoint s = random_strip_point(rng);
    conjugate.guarded([&] {
      const Complex a = series::eta_accelerated(s.value(), 1e-12).value;
      const Complex b = series::eta_accelerated(std::conj(s.value()), 1e-12).value;
      conjugate.record(std::abs(b - std::conj(a)) / std::max(std::abs(a), 1e-300));
    });
    doubling.guarded([&] {
      const auto base = series::eta_accelerated(s.value(), 1e-10);
      const int order = std::min(2 * static_cast<int>(base.n_terms_used),
                                 series::kMaxAccelerationOrder);
      const auto doubled = series::eta_cvz(s.value(), order);
      // Ratio of the change to the reported estimate.
      doubling.record(std::abs(doubled.value - base.value) / base.error_estimate);
    });
  }

  Check branches("branch-agreement", 1e-8);
  const series::ZetaOptions options;
  series::ZetaOptions eta_only;
  eta_only.switch_threshold = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::int64_t k = rng.integer(1, 3) * (rng.coin() ? 1 : -1);
    const Complex zero(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / std::numbers::ln2);
    const double distance = rng.uniform(options.switch_threshold, 2.0 * options.switch_threshold);
    const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const Complex s = zero + std::polar(distance, angle);
    branches.guarded([&] {
      const Complex via_eta = series::zeta_from_eta(s, eta_only).value;
      const Complex via_em = series::zeta_euler_maclaurin(s).value;
      branches.record(relative(std::abs(via_eta - via_em), std::abs(via_em)));
    });
  }

  out.push_back(functional.result());
  out.push_back(reflection.result());
  out.push_back(zeta_two.result());
  out.push_back(eta_one.result());
  out.push_back(gamma_half.result());
  out.push_back(conjugate.result());
  out.push_back(doubling.result());
  out.push_back(branches.result());
}

void equivalence_suite(std::uint64_t seed, std::vector<CheckResult>& out) {
  Sampler rng(seed ^ 0xd1b54a32d192ed03ULL);
  constexpr double kKnownZeros[] = {14.134725141734694, 21.022039638771555, 25.010857580145689};

  Check location("zero-location", 1e-6);
  Check residuals("zero-residuals", zeros::kZeroThreshold);
  Check brackets("bracket-soundness", 0.0);
  Check verdicts("zero-verdicts", 0.0);
  Check chain("residual-chain", 1e-6);
  Check symmetry("conjugate-zero", zeros::kZeroThreshold);
  location.guarded([&] {
    const auto found = zeros::scan_zeros(10.0, 30.0, zeros::kDefaultScanStep);
    location.record_bool(found.size() == std::size(kKnownZeros));
    for (std::size_t i = 0; i < found.size() && i < std::size(kKnownZeros); ++i) {
      const auto& c = found[i];
      location.record(std::abs(c.refined_t - kKnownZeros[i]));
      residuals.record(c.z_residual);
      residuals.record(c.eta_residual);
      residuals.record(c.zeta_residual);
      const double z_lo = zeros::hardy_z(c.bracket.first);
      const double z_hi = zeros::hardy_z(c.bracket.second);
      brackets.record_bool(z_lo * z_hi < 0.0 && c.bracket.first <= c.refined_t &&
                           c.refined_t <= c.bracket.second);
      const auto report = zeros::verify_zero_equivalence({0.5, c.refined_t});
      verdicts.record_bool(report.verdict == zeros::EquivalenceVerdict::BothZero &&
                           report.eta_zero_implies_zeta_zero && report.zeta_zero_implies_eta_zero);
      const double factor = std::abs(series::factor_info(Complex(0.5, c.refined_t)).factor);
      chain.record(std::abs(c.eta_residual - factor * c.zeta_residual) /
                   std::max(c.eta_residual, 1e-300));
      symmetry.record(zeros::check_symmetry(c).conjugate_residual);
    }
  });

  Check boundary("factor-zero-boundary", 0.0);
  boundary.guarded([&] {
    const StripPoint s{1.0, 2.0 * std::numbers::pi / std::numbers::ln2};
    const auto report = zeros::verify_zero_equivalence(s);
    boundary.record_bool(report.eta_abs < zeros::kZeroThreshold && report.zeta_abs > 0.1 &&
                         report.verdict == zeros::EquivalenceVerdict::FactorZeroBoundary);
  });

  Check non_zero("non-zero-verdict", 0.0);
  non_zero.guarded([&] {
    const auto report = zeros::verify_zero_equivalence({0.5, 1.0});
    non_zero.record_bool(report.verdict == zeros::EquivalenceVerdict::NeitherZero);
  });

  Check moduli("conjugate-modulus", 1e-10);
  for (int i = 0; i < 20; ++i) {
    const StripPoint s = random_strip_point(rng);
    moduli.guarded([&] { moduli.record(zeros::conjugate_modulus_gap(s)); });
  }

  for (const auto& check : {location, residuals, brackets, verdicts, chain, symmetry, boundary,
                            non_zero, moduli}) {
    out.push_back(check.result());
  }
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Identity:
      return "identity";
    case Suite::Functional:
      return "functional";
    case Suite::Equivalence:
      return "equivalence";
    case Suite::All:
      return "all";
  }
  return "all";
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto suite : {Suite::Identity, Suite::Functional, Suite::Equivalence, Suite::All}) {
    if (name == suite_name(suite)) return suite;
  }
  return std::nullopt;
}

std::vector<CheckResult> run_verify(Suite suite, std::uint64_t seed) {
  std::vector<CheckResult> checks;
  if (suite == Suite::Identity || suite == Suite::All) identity_suite(seed, checks);
  if (suite == Suite::Functional || suite == Suite::All) functional_suite(seed, checks);
  if (suite == Suite::Equivalence || suite == Suite::All) equivalence_suite(seed, checks);
  return checks;
}

std::string format_verify_summary(Suite suite, std::uint64_t seed,
                                  const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  out << "verify suite=" << suite_name(suite) << " seed=" << seed << '\n';
  std::size_t failed = 0;
  for (const auto& check : checks) {
    if (!check.passed()) ++failed;
    out << (check.passed() ? "PASS " : "FAIL ") << check.name << " count=" << check.count
        << " failures=" << check.failures << " worst=" << report::format_double(check.worst)
        << " threshold=" << report::format_double(check.threshold) << '\n';
  }
  out << "result: " << (failed == 0 ? "PASS" : "FAIL") << " (" << checks.size() - failed << '/'
      << checks.size() << " checks passed)\n";
  return out.str();
}

}  // namespace zetalab::harness
