#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/series_core.hpp"

namespace zetalab::series {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive_sigma(Complex s, const char* what) {
  if (!(s.real() > 0.0)) {
    throw InvalidArgument(std::string(what) + ": requires Re(s) > 0");
  }
}

double log_gamma_ratio(Complex s) {
  // log(Gamma(sigma) / |Gamma(s)|); both sides through the same routine so the
  // real-axis case is exactly zero.
  return log_gamma(Complex(s.real(), 0.0)).real() - log_gamma(s).real();
}

}  // namespace

std::string_view to_string(EtaMethod method) noexcept {
  switch (method) {
    case EtaMethod::Direct:
      return "direct";
    case EtaMethod::Accelerated:
      return "accelerated";
    case EtaMethod::EulerMaclaurinFallback:
      return "euler-maclaurin-fallback";
  }
  return "accelerated";
}

TermComponents term_components(std::int64_t k, double sigma, double t) noexcept {
  const auto kd = static_cast<double>(k);
  const double log_k = std::log(kd);
  return {log_k, std::pow(kd, -sigma), t * log_k};
}

void PartialSumState::advance() {
  const std::int64_t k = n_terms_ + 1;
  const auto term = term_components(k, point_.sigma, point_.t);
  const double signed_weight = (k % 2 == 1) ? term.weight : -term.weight;
  cos_sum_.add(signed_weight * std::cos(term.phase));
  sin_sum_.add(signed_weight * std::sin(term.phase));
  power_sum_.add(term.weight * term.weight);
  n_terms_ = k;
}

void PartialSumState::advance_to(std::int64_t n) {
  if (n < n_terms_) {
    throw InvalidArgument("PartialSumState::advance_to: cannot move backwards");
  }
  if (n > kMaxPartialTerms) {
    throw InvalidArgument("PartialSumState::advance_to: N exceeds the 10^7 envelope");
  }
  while (n_terms_ < n) advance();
}

EtaPartial eta_partial(Complex s, std::int64_t n_terms) {
  if (n_terms < 1) {
    throw InvalidArgument("eta_partial: N must be >= 1 (empty sum)");
  }
  PartialSumState state{StripPoint(s)};
  state.advance_to(n_terms);
  return {state.eta(), state};
}

int cvz_order_for(Complex s, double truncation_target) {
  require_positive_sigma(s, "cvz_order_for");
  if (!(truncation_target > 0.0)) {
    throw InvalidArgument("cvz_order_for: target must be positive");
  }
  const double log_base = std::log(3.0 + std::sqrt(8.0));
  const double needed =
      (std::numbers::ln2 + log_gamma_ratio(s) - std::log(truncation_target)) / log_base;
  if (!std::isfinite(needed)) return kMaxAccelerationOrder + 1;
  return std::max(1, static_cast<int>(std::ceil(needed)));
}

EtaEvaluation eta_cvz(Complex s, int order) {
  require_positive_sigma(s, "eta_cvz");
  if (order < 1 || order > kMaxAccelerationOrder) {
    throw InvalidArgument("eta_cvz: order out of range");
  }
  // Weights are carried in extended precision so that their recurrence adds
  // nothing measurable; each double term then carries a few ulps.
  using Wide = long double;
  const Wide base = 3.0L + std::sqrt(8.0L);
  const int n = order;
  Wide d = std::pow(base, static_cast<Wide>(n));
  d = (d + 1.0L / d) / 2.0L;
  Wide b = -1.0L;
  Wide c = -d;

  CompensatedComplexSum<Complex> acc;
  double magnitude = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const auto term = term_components(k + 1, s.real(), s.imag());
    const double cw = static_cast<double>(c / d) * term.weight;
    acc.add(Complex(cw * std::cos(term.phase), -cw * std::sin(term.phase)));
    magnitude += std::abs(cw);
    b = static_cast<Wide>(k + n) * static_cast<Wide>(k - n) * b /
        ((k + 0.5L) * (k + 1.0L));
  }

  const Complex value = acc.value();
  const double truncation =
      2.0 * std::exp(log_gamma_ratio(s) - n * std::log(3.0 + std::sqrt(8.0)));
  const double rounding = kEps * (4.0 * magnitude + std::abs(value));
  return {value, n, EtaMethod::Accelerated, truncation + rounding};
}

EtaEvaluation eta_accelerated(Complex s, double tol, int max_order) {
  require_positive_sigma(s, "eta_accelerated");
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidArgument("eta_accelerated: tol must be positive and finite");
  }
  max_order = std::min(max_order, kMaxAccelerationOrder);
  if (max_order < 1) {
    throw InvalidArgument("eta_accelerated: max_order must be >= 1");
  }
  const int order = cvz_order_for(s, tol / 2.0);
  if (order > max_order) {
    const auto best = eta_cvz(s, max_order);
    throw NonConvergenceError(
        "eta_accelerated: tolerance needs order " + std::to_string(order) +
            " > max " + std::to_string(max_order),
        best.value, best.error_estimate);
  }
  auto result = eta_cvz(s, order);
  if (result.error_estimate > tol) {
    throw NonConvergenceError("eta_accelerated: rounding floor exceeds tolerance",
                              result.value, result.error_estimate);
  }
  return result;
}

EtaEvaluation eta_direct(Complex s, std::int64_t n_terms) {
  auto partial = eta_partial(s, n_terms);
  const Complex eta_n = partial.value;
  partial.state.advance();
  const Complex eta_next = partial.state.eta();
  const double estimate =
      std::abs(s) * std::pow(static_cast<double>(n_terms), -s.real() - 1.0);
  return {(eta_n + eta_next) / 2.0, n_terms + 1, EtaMethod::Direct, estimate};
}

}  // namespace zetalab::series
