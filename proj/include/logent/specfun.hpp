#pragma once

#include <cmath>

#include "logent/common.hpp"

// Real log-gamma, digamma and trigamma for strictly positive arguments.
//
// All three use the same scheme: the recurrence relations
//   ln G(x) = ln G(x+1) - ln x,  psi(x) = psi(x+1) - 1/x,
//   psi'(x) = psi'(x+1) + 1/x^2
// shift the argument up to x >= 12, where the Stirling-type asymptotic
// series with Bernoulli-number coefficients (Abramowitz & Stegun 6.1.41,
// 6.3.18, 6.4.12) converge past extended precision.  Intermediates are
// long double so the final double result is accurate to a few ulp over
// the working range [1e-3, 1e3]; outside that range results are still
// best-effort correct.

namespace logent {

namespace detail {

inline constexpr long double shift_cutoff = 12.0L;
inline constexpr long double half_ln_two_pi = 0.918938533204672741780329736406L;

// B_{2n}/(2n(2n-1)) for ln-gamma, n = 1..8.
inline constexpr long double lgamma_series[] = {
    1.0L / 12.0L,       -1.0L / 360.0L,      1.0L / 1260.0L, -1.0L / 1680.0L,
    1.0L / 1188.0L,     -691.0L / 360360.0L, 1.0L / 156.0L,  -3617.0L / 122400.0L,
};

// B_{2n}/(2n) for digamma, n = 1..7.
inline constexpr long double digamma_series[] = {
    1.0L / 12.0L,  -1.0L / 120.0L,      1.0L / 252.0L, -1.0L / 240.0L,
    1.0L / 132.0L, 691.0L / 32760.0L,   -1.0L / 12.0L,
};

// B_{2n} for trigamma, n = 1..7.
inline constexpr long double trigamma_series[] = {
    1.0L / 6.0L,  -1.0L / 30.0L,      1.0L / 42.0L, -1.0L / 30.0L,
    5.0L / 66.0L, -691.0L / 2730.0L,  7.0L / 6.0L,
};

}  // namespace detail

inline double ln_gamma(PositiveReal nu) {
  long double x = static_cast<double>(nu);
  long double shift = 0.0L;
  while (x < detail::shift_cutoff) {
    shift += std::log(x);
    x += 1.0L;
  }
  const long double inv2 = 1.0L / (x * x);
  long double series = 0.0L;
  long double power = 1.0L / x;
  for (long double coeff : detail::lgamma_series) {
    series += coeff * power;
    power *= inv2;
  }
  const long double result =
      (x - 0.5L) * std::log(x) - x + detail::half_ln_two_pi + series - shift;
  return static_cast<double>(result);
}

inline double digamma(PositiveReal nu) {
  long double x = static_cast<double>(nu);
  long double shift = 0.0L;
  while (x < detail::shift_cutoff) {
    shift += 1.0L / x;
    x += 1.0L;
  }
  const long double inv2 = 1.0L / (x * x);
  long double series = 0.0L;
  long double power = inv2;
  for (long double coeff : detail::digamma_series) {
    series += coeff * power;
    power *= inv2;
  }
  const long double result = std::log(x) - 0.5L / x - series - shift;
  return static_cast<double>(result);
}

inline double trigamma(PositiveReal nu) {
  long double x = static_cast<double>(nu);
  long double shift = 0.0L;
  while (x < detail::shift_cutoff) {
    shift += 1.0L / (x * x);
    x += 1.0L;
  }
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  long double power = inv2 * inv;
  for (long double coeff : detail::trigamma_series) {
    series += coeff * power;
    power *= inv2;
  }
  const long double result = inv + 0.5L * inv2 + series + shift;
  return static_cast<double>(result);
}

}  // namespace logent
