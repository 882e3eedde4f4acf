#include <array>
#include <cmath>
#include <numbers>

#include "zetalab/errors.hpp"
#include "zetalab/series_core.hpp"

namespace zetalab::series {

namespace {

// g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void reject_pole(Complex s, const char* what) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw PoleError(std::string(what) + ": pole at non-positive integer " +
                    std::to_string(static_cast<long long>(s.real())));
  }
}

Complex lanczos_series(Complex z) {
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  return x;
}

// Valid for Re(s) >= 1/2.
Complex lanczos_gamma(Complex s) {
  const Complex z = s - 1.0;
  const Complex base = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::exp((z + 0.5) * std::log(base) - base) *
         lanczos_series(z);
}

Complex lanczos_log_gamma(Complex s) {
  const Complex z = s - 1.0;
  const Complex base = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(base) - base +
         std::log(lanczos_series(z));
}

}  // namespace

Complex gamma_complex(Complex s) {
  reject_pole(s, "gamma_complex");
  if (s.real() < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * s) * lanczos_gamma(1.0 - s));
  }
  return lanczos_gamma(s);
}

Complex log_gamma(Complex s) {
  reject_pole(s, "log_gamma");
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  // Shift right: log Gamma(s) = log Gamma(s + m) - sum_{j<m} log(s + j).
  const int m = static_cast<int>(std::ceil(0.5 - s.real()));
  Complex shift = 0.0;
  for (int j = 0; j < m; ++j) shift += std::log(s + static_cast<double>(j));
  return lanczos_log_gamma(s + static_cast<double>(m)) - shift;
}

}  // namespace zetalab::series
