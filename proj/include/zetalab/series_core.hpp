#pragma once

// Complex series engine: Dirichlet eta partial sums and accelerated values,
// zeta through the eta factor identity (with an Euler-Maclaurin route near
// the zeros of 1 - 2^{1-s}), complex Gamma and the functional-equation check.
//
// Arithmetic is binary64 with compensated accumulation. The validity
// envelope is |t| <= 100 and N <= 10^7.

#include <cstdint>
#include <string_view>

#include "zetalab/compensated.hpp"
#include "zetalab/strip_point.hpp"

namespace zetalab::series {

inline constexpr std::int64_t kMaxPartialTerms = 10'000'000;
inline constexpr double kEnvelopeMaxAbsT = 100.0;

/// Per-index pieces of the k-th eta term (-1)^{k-1} k^{-s}:
/// k^{-s} = weight * (cos(phase) - i sin(phase)).
struct TermComponents {
  double log_k;
  double weight;  // k^{-sigma}
  double phase;   // t * ln k
};

TermComponents term_components(std::int64_t k, double sigma, double t) noexcept;

/// Running state of eta_N(s) split into the real cosine and sine sums, plus
/// the diagonal power sum P_N = sum k^{-2 sigma}. Advancing from N to N+1
/// adds exactly the (N+1)-th term of each series.
class PartialSumState {
public:
  explicit PartialSumState(StripPoint s) : point_(s) {}

  void advance();
  void advance_to(std::int64_t n);

  const StripPoint& point() const noexcept { return point_; }
  std::int64_t n_terms() const noexcept { return n_terms_; }

  /// sum (-1)^{k-1} cos(t ln k) / k^sigma
  double cos_sum() const noexcept { return cos_sum_.value(); }
  /// sum (-1)^{k-1} sin(t ln k) / k^sigma
  double sin_sum() const noexcept { return sin_sum_.value(); }
  /// sum k^{-2 sigma}
  double power_sum() const noexcept { return power_sum_.value(); }

  const CompensatedSum<double>& cos_accumulator() const noexcept { return cos_sum_; }
  const CompensatedSum<double>& sin_accumulator() const noexcept { return sin_sum_; }
  const CompensatedSum<double>& power_accumulator() const noexcept { return power_sum_; }

  /// cos_sum - i sin_sum, i.e. eta_N(s).
  Complex eta() const noexcept { return {cos_sum(), -sin_sum()}; }

  /// Partial sums only converge to eta(s) for sigma > 0.
  bool convergent() const noexcept { return point_.sigma > 0.0; }

  bool operator==(const PartialSumState&) const noexcept = default;

private:
  StripPoint point_;
  std::int64_t n_terms_ = 0;
  CompensatedSum<double> cos_sum_;
  CompensatedSum<double> sin_sum_;
  CompensatedSum<double> power_sum_;
};

struct EtaPartial {
  Complex value;
  PartialSumState state;
};

/// eta_N(s) = sum_{k=1}^{N} (-1)^{k-1} k^{-s}. Throws InvalidArgument for
/// N = 0 or N above kMaxPartialTerms.
EtaPartial eta_partial(Complex s, std::int64_t n_terms);

enum class EtaMethod { Direct, Accelerated, EulerMaclaurinFallback };

std::string_view to_string(EtaMethod method) noexcept;

/// A series value with the method that produced it. error_estimate bounds
/// |value - exact|.
struct EtaEvaluation {
  Complex value;
  std::int64_t n_terms_used = 0;
  EtaMethod method = EtaMethod::Accelerated;
  double error_estimate = 0.0;
};

inline constexpr int kMaxAccelerationOrder = 360;

/// Cohen-Rodriguez Villegas-Zagier acceleration of eta at a fixed order.
/// The estimate is the truncation bound 2 Gamma(sigma)/|Gamma(s)| (3+sqrt 8)^-n
/// plus a running rounding bound. Requires sigma > 0 and 1 <= order <=
/// kMaxAccelerationOrder.
EtaEvaluation eta_cvz(Complex s, int order);

/// Smallest CVZ order whose truncation bound is below `truncation_target`.
int cvz_order_for(Complex s, double truncation_target);

/// eta(s) to within `tol`. Deterministic in (s, tol). Throws
/// NonConvergenceError (carrying the best value) when the required order
/// exceeds `max_order` or rounding alone exceeds tol.
EtaEvaluation eta_accelerated(Complex s, double tol,
                              int max_order = kMaxAccelerationOrder);

/// Averaged direct partial sum (eta_N + eta_{N+1}) / 2, kept as a slow
/// cross-check for the accelerated route. The estimate |s| N^{-sigma-1} is
/// heuristic.
EtaEvaluation eta_direct(Complex s, std::int64_t n_terms);

struct FactorInfo {
  Complex factor;  // 1 - 2^{1-s}
  double theta = 0.0;  // t ln 2
  double distance_to_nearest_factor_zero = 0.0;
  std::int64_t nearest_k = 0;  // the zero 1 + 2 pi i k / ln 2
};

FactorInfo factor_info(Complex s);

struct ZetaOptions {
  bool allow_fallback = true;
  /// |1 - 2^{1-s}| below this switches to Euler-Maclaurin.
  double switch_threshold = 1e-3;
  double eta_tolerance = 1e-12;
};

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for sigma > 0, s != 1. Near a factor zero
/// the Euler-Maclaurin value is returned instead (or SingularFactorError when
/// the fallback is disabled). s = 1 always throws PoleError.
EtaEvaluation zeta_from_eta(Complex s, const ZetaOptions& options = {});

inline constexpr int kFallbackEulerMaclaurinCorrections = 4;
inline constexpr int kMaxEulerMaclaurinCorrections = 15;

/// zeta(s) by Euler-Maclaurin summation with an explicit tail integral and
/// Bernoulli corrections through B_{2 corrections} (B_8 by default). N grows
/// until the remainder bound meets the rounding floor of the head sum.
/// Valid for s != 1 and sigma > -2 corrections.
EtaEvaluation zeta_euler_maclaurin(Complex s,
                                   int corrections = kFallbackEulerMaclaurinCorrections);

/// zeta anywhere in the computable region: the eta route for sigma > 0 and
/// Euler-Maclaurin through B_30 for sigma <= 0 (sigma > -30).
EtaEvaluation zeta(Complex s);

/// Gamma(s) by a g = 7 Lanczos approximation, reflection for Re(s) < 1/2.
/// PoleError at non-positive integers.
Complex gamma_complex(Complex s);

/// Principal branch of log Gamma(s) (cut along the non-positive real axis);
/// the imaginary part is continuous off that cut.
Complex log_gamma(Complex s);

/// |zeta(1-s) - 2^{1-s} pi^{-s} cos(pi s / 2) Gamma(s) zeta(s)| with each side
/// evaluated independently.
double functional_equation_residual(Complex s);

}  // namespace zetalab::series
