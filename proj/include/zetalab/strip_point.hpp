#pragma once

#include <complex>
#include <string_view>

namespace zetalab {

using Complex = std::complex<double>;

enum class StripRegion { OpenStrip, Boundary, Exterior };

std::string_view to_string(StripRegion region) noexcept;

/// A complex argument s = sigma + i t together with its position relative to
/// the critical strip 0 < sigma < 1.
struct StripPoint {
  double sigma = 0.0;
  double t = 0.0;

  constexpr StripPoint() = default;
  constexpr StripPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {}
  explicit StripPoint(Complex s) : sigma(s.real()), t(s.imag()) {}

  Complex value() const noexcept { return {sigma, t}; }
  StripPoint conj() const noexcept { return {sigma, -t}; }

  constexpr StripRegion region() const noexcept {
    if (sigma > 0.0 && sigma < 1.0) return StripRegion::OpenStrip;
    if (sigma == 0.0 || sigma == 1.0) return StripRegion::Boundary;
    return StripRegion::Exterior;
  }

  constexpr bool in_open_strip() const noexcept {
    return region() == StripRegion::OpenStrip;
  }

  constexpr bool operator==(const StripPoint&) const noexcept = default;
};

/// Throws InvalidArgument unless 0 < sigma < 1. `what` names the caller.
void require_open_strip(const StripPoint& s, std::string_view what);

}  // namespace zetalab
