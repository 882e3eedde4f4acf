#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/series_core.hpp"

namespace zetalab::series {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2 .. B_32 divided by (2j)!. The last entry only feeds the remainder bound.
constexpr std::array<double, kMaxEulerMaclaurinCorrections + 1> kBernoulliOverFactorial = {
    1.6666666666666666e-01 / 2.0,
    -3.3333333333333333e-02 / 24.0,
    2.3809523809523810e-02 / 720.0,
    -3.3333333333333333e-02 / 40320.0,
    7.5757575757575758e-02 / 3628800.0,
    -2.5311355311355311e-01 / 479001600.0,
    1.1666666666666667e+00 / 87178291200.0,
    -7.0921568627450980e+00 / 20922789888000.0,
    5.4971177944862155e+01 / 6402373705728000.0,
    -5.2912424242424242e+02 / 2432902008176640000.0,
    6.1921231884057971e+03 / 1.1240007277776077e+21,
    -8.6580253113553114e+04 / 6.2044840173323941e+23,
    1.4255171666666667e+06 / 4.0329146112660565e+26,
    -2.7298231067816092e+07 / 3.0488834461171386e+29,
    6.0158087390064237e+08 / 2.6525285981219107e+32,
    -1.5116315767092157e+10 / 2.6313083693369353e+35};

constexpr double kEulerMaclaurinTarget = 1e-15;
constexpr std::int64_t kEulerMaclaurinMinN = 10;
constexpr std::int64_t kEulerMaclaurinMaxN = 200'000;

void reject_pole(Complex s, const char* what) {
  if (s == Complex(1.0, 0.0)) {
    throw PoleError(std::string(what) + ": s = 1 is the pole of zeta");
  }
}

// k^{-s} from the shared term decomposition.
Complex power_term(std::int64_t k, Complex s) {
  const auto term = term_components(k, s.real(), s.imag());
  return {term.weight * std::cos(term.phase), -term.weight * std::sin(term.phase)};
}

}  // namespace

FactorInfo factor_info(Complex s) {
  const double sigma = s.real();
  const double t = s.imag();
  const double theta = t * std::numbers::ln2;
  const double scale = std::pow(2.0, 1.0 - sigma);
  // 2^{1-s} = 2^{1-sigma} (cos theta - i sin theta)
  const Complex factor(1.0 - scale * std::cos(theta), scale * std::sin(theta));

  const double spacing = 2.0 * std::numbers::pi / std::numbers::ln2;
  const auto k = static_cast<std::int64_t>(std::llround(t / spacing));
  const double distance = std::hypot(sigma - 1.0, t - static_cast<double>(k) * spacing);
  return {factor, theta, distance, k};
}

EtaEvaluation zeta_euler_maclaurin(Complex s, int corrections) {
  reject_pole(s, "zeta_euler_maclaurin");
  if (corrections < 1 || corrections > kMaxEulerMaclaurinCorrections) {
    throw InvalidArgument("zeta_euler_maclaurin: corrections out of range");
  }
  const double sigma = s.real();
  const double order = sigma + 2.0 * corrections + 1.0;
  if (!(order > 1.0)) {
    throw DomainError("zeta_euler_maclaurin: Re(s) too negative for " +
                      std::to_string(corrections) + " corrections");
  }
  const auto m = static_cast<std::size_t>(corrections);

  // |s (s+1) ... (s+2m)| |B_{2m+2}| / (2m+2)! / (sigma + 2m + 1) N^{-sigma-2m-1}
  // bounds the remainder after the B_{2m} correction.
  double rising_abs = 1.0;
  for (int j = 0; j <= 2 * corrections; ++j) rising_abs *= std::abs(s + static_cast<double>(j));
  const double remainder_scale = rising_abs * std::abs(kBernoulliOverFactorial[m]) / order;
  auto remainder_at = [&](double n) { return remainder_scale * std::pow(n, -order); };
  // Size of the head sum, which sets the rounding floor.
  auto magnitude_at = [&](double n) {
    return std::abs(1.0 - sigma) < 1e-9 ? 1.0 + std::log(n)
                                        : 1.0 + (std::pow(n, 1.0 - sigma) - 1.0) / (1.0 - sigma);
  };

  // Grow N until truncation drops below the target or the rounding floor.
  auto n = kEulerMaclaurinMinN;
  while (n < kEulerMaclaurinMaxN) {
    const auto nd = static_cast<double>(n);
    const double floor = kEulerMaclaurinTarget + 4.0 * kEps * magnitude_at(nd);
    if (remainder_at(nd) <= floor) break;
    n = std::min(kEulerMaclaurinMaxN, n + std::max<std::int64_t>(1, n / 8));
  }
  const auto nd = static_cast<double>(n);

  CompensatedComplexSum<Complex> head;
  double magnitude = 0.0;
  for (std::int64_t k = 1; k < n; ++k) {
    const Complex term = power_term(k, s);
    head.add(term);
    magnitude += std::abs(term);
  }

  const Complex n_pow = power_term(n, s);  // N^{-s}
  const Complex tail = nd * n_pow / (s - 1.0);
  const Complex half = n_pow / 2.0;
  head.add(tail);
  head.add(half);
  magnitude += std::abs(tail) + std::abs(half);

  Complex rising = s;  // s (s+1) ... (s + 2j - 2)
  double n_inv_power = 1.0 / nd;  // N^{-(2j-1)}
  for (std::size_t j = 0; j < m; ++j) {
    const Complex correction = kBernoulliOverFactorial[j] * rising * n_pow * n_inv_power;
    head.add(correction);
    magnitude += std::abs(correction);
    const double next = static_cast<double>(2 * j + 1);
    rising *= (s + next) * (s + next + 1.0);
    n_inv_power /= nd * nd;
  }

  const double rounding = 4.0 * kEps * magnitude;
  return {head.value(), n, EtaMethod::EulerMaclaurinFallback, remainder_at(nd) + rounding};
}

EtaEvaluation zeta_from_eta(Complex s, const ZetaOptions& options) {
  reject_pole(s, "zeta_from_eta");
  if (!(s.real() > 0.0)) {
    throw InvalidArgument("zeta_from_eta: requires Re(s) > 0");
  }
  const auto info = factor_info(s);
  const double factor_abs = std::abs(info.factor);
  if (factor_abs < options.switch_threshold) {
    if (!options.allow_fallback) {
      throw SingularFactorError(
          "zeta_from_eta: 1 - 2^{1-s} vanishes here and the Euler-Maclaurin "
          "fallback is disabled");
    }
    return zeta_euler_maclaurin(s);
  }
  const auto eta = eta_accelerated(s, options.eta_tolerance);
  return {eta.value / info.factor, eta.n_terms_used, EtaMethod::Accelerated,
          eta.error_estimate / factor_abs};
}

EtaEvaluation zeta(Complex s) {
  reject_pole(s, "zeta");
  if (s.real() > 0.0) return zeta_from_eta(s);
  return zeta_euler_maclaurin(s, kMaxEulerMaclaurinCorrections);
}

double functional_equation_residual(Complex s) {
  reject_pole(s, "functional_equation_residual");
  reject_pole(1.0 - s, "functional_equation_residual");
  const Complex lhs = zeta(1.0 - s).value;
  const Complex gamma = gamma_complex(s);
  const Complex zeta_s = zeta(s).value;
  const Complex rhs = std::exp((1.0 - s) * std::numbers::ln2) *
                      std::exp(-s * std::log(std::numbers::pi)) *
                      std::cos(s * (std::numbers::pi / 2.0)) * gamma * zeta_s;
  return std::abs(lhs - rhs);
}

}  // namespace zetalab::series
