#pragma once

// Critical-line zeros through sign changes of the Hardy Z-function, and
// numeric checks of the eta <-> zeta zero correspondence and strip symmetry.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "zetalab/strip_point.hpp"

namespace zetalab::zeros {

/// "Is a zero" below this modulus, "is not a zero" above kNonZeroThreshold;
/// anything in between is indeterminate.
inline constexpr double kZeroThreshold = 1e-6;
inline constexpr double kNonZeroThreshold = 1e-2;
inline constexpr double kBisectionWidth = 1e-10;
inline constexpr double kDefaultScanStep = 0.1;
/// Im(e^{i theta} zeta(1/2 + i t)) must stay below this.
inline constexpr double kHardyImagTolerance = 1e-8;
/// theta switches from log-gamma to the asymptotic series at this |t|.
inline constexpr double kThetaAsymptoticFrom = 10.0;

enum class ThetaMethod { Asymptotic, LogGamma };

std::string_view to_string(ThetaMethod method) noexcept;

struct ThetaValue {
  double t = 0.0;
  double theta = 0.0;
  ThetaMethod method = ThetaMethod::Asymptotic;
};

/// Riemann-Siegel theta. Odd in t; t = 0 is rejected.
ThetaValue theta_rs(double t);

/// theta through arg Gamma(1/4 + i t/2) - t ln(pi) / 2, for any t != 0.
double theta_log_gamma(double t);

/// theta through t/2 ln(t/2 pi) - t/2 - pi/8 + 1/(48 t) + 7/(5760 t^3).
double theta_asymptotic(double t);

/// Z(t) = Re(e^{i theta(t)} zeta(1/2 + i t)). Throws ConsistencyError when the
/// discarded imaginary part exceeds kHardyImagTolerance.
double hardy_z(double t);

struct ZeroCandidate {
  std::pair<double, double> bracket;  // Z changes sign across it
  double refined_t = 0.0;
  double z_residual = 0.0;
  double eta_residual = 0.0;
  double zeta_residual = 0.0;
  int iterations = 0;
};

/// Every sign change of Z on the grid t_lo + i*step becomes one candidate,
/// bisected to a bracket narrower than kBisectionWidth. Zeros closer together
/// than the step can be missed.
std::vector<ZeroCandidate> scan_zeros(double t_lo, double t_hi,
                                      double step = kDefaultScanStep);

enum class EquivalenceVerdict { BothZero, NeitherZero, FactorZeroBoundary, Indeterminate };

std::string_view to_string(EquivalenceVerdict verdict) noexcept;

struct EquivalenceReport {
  StripPoint s;
  double eta_abs = 0.0;
  double zeta_abs = 0.0;
  double factor_abs = 0.0;
  bool eta_is_zero = false;
  bool zeta_is_zero = false;
  /// |eta| < tol  <=>  |zeta| < tol / |factor|, checked both ways.
  bool eta_zero_implies_zeta_zero = false;
  bool zeta_zero_implies_eta_zero = false;
  EquivalenceVerdict verdict = EquivalenceVerdict::Indeterminate;
};

/// Requires 0 < sigma < 1, or sigma == 1 for the factor-zero demonstration.
EquivalenceReport verify_zero_equivalence(const StripPoint& s);

struct SymmetryReport {
  double refined_t = 0.0;
  double original_residual = 0.0;   // |zeta(1/2 + i t)|
  double conjugate_residual = 0.0;  // |zeta(1/2 - i t)|
  double reflected_residual = 0.0;  // |zeta(1 - s)|
  /// On the critical line 1 - s == conj(s), so the two checks coincide.
  bool reflection_is_conjugate = false;
  bool passed = false;
};

SymmetryReport check_symmetry(const ZeroCandidate& candidate);

/// ||zeta(s)| - |zeta(conj s)||.
double conjugate_modulus_gap(const StripPoint& s);

}  // namespace zetalab::zeros
