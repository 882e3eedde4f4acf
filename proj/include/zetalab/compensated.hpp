#pragma once

#include <cmath>

#ifdef __FAST_MATH__
#error fast math enabled, this would negate compensation.
#endif

namespace zetalab {

/// Kahan-Babuska-Neumaier running sum.
///
/// Unlike plain Kahan, the compensation stays correct when the incoming
/// term is larger in magnitude than the running sum, which happens at the
/// start of every alternating series we feed through here.
template <typename Real>
struct CompensatedSum {
  Real sum = Real{0};
  Real compensation = Real{0};

  constexpr void add(Real term) noexcept {
    const Real t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }

  constexpr CompensatedSum& operator+=(Real term) noexcept {
    add(term);
    return *this;
  }

  constexpr Real value() const noexcept { return sum + compensation; }

  constexpr bool operator==(const CompensatedSum&) const noexcept = default;
};

/// Component-wise compensated sum for complex terms.
template <typename Complex>
struct CompensatedComplexSum {
  using Real = typename Complex::value_type;
  CompensatedSum<Real> re;
  CompensatedSum<Real> im;

  constexpr void add(const Complex& z) noexcept {
    re.add(z.real());
    im.add(z.imag());
  }

  constexpr CompensatedComplexSum& operator+=(const Complex& z) noexcept {
    add(z);
    return *this;
  }

  constexpr Complex value() const noexcept { return {re.value(), im.value()}; }
};

}  // namespace zetalab
