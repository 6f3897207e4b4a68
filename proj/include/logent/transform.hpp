#pragma once

#include <cmath>

#include "logent/common.hpp"

// Entropy laws for the power transform Y = a X^b (a, b > 0):
//
//   H[Y] = H[X] + ln b + (b - 1) E[ln X] + ln a
//   E[ln Y] = ln a + b E[ln X],   V[ln Y] = b^2 V[ln X]
//
// Inverting the log-moment relations recovers the transform, and chaining
// them gives the family identity  H[X] = E[ln X] + ln(V[ln X])/2 + K with
// K constant across all multiples and powers of one underlying variate.
// Only relative entropies need no K at all: it cancels from differences.

namespace logent {

inline double entropy_after_transform(double h_x, double mean_log_x, const TransformParams& t) {
  if (!std::isfinite(h_x) || !std::isfinite(mean_log_x))
    throw std::domain_error("entropy and E[ln X] must be finite");
  return h_x + std::log(t.b) + (t.b - 1.0) * mean_log_x + std::log(t.a);
}

inline LogMoments forward_log_moments(const LogMoments& base, const TransformParams& t) {
  return {std::log(t.a) + t.b * base.mean_log, t.b * t.b * base.var_log};
}

namespace detail {
inline void require_usable_variance(double var_log) {
  if (var_log <= degenerate_variance_epsilon)
    throw std::domain_error("V[ln X] is degenerate (point mass has no differential entropy)");
}
}  // namespace detail

// Recovers (a, b) of Y = a X^b from the log-moments of X and Y.  The
// square root can only yield b > 0; decreasing transforms are not
// representable.
inline TransformParams recover_transform(const LogMoments& base, const LogMoments& transformed) {
  detail::require_usable_variance(base.var_log);
  detail::require_usable_variance(transformed.var_log);
  const double b = std::sqrt(transformed.var_log / base.var_log);
  const double ln_a = transformed.mean_log - b * base.mean_log;
  return {std::exp(ln_a), b};
}

inline double entropy_from_log_moments(const LogMoments& m, double k) {
  if (!std::isfinite(k)) throw std::domain_error("K must be finite");
  detail::require_usable_variance(m.var_log);
  return m.mean_log + 0.5 * std::log(m.var_log) + k;
}

// H[Y] - H[X] for two members of one a X^b family, from log-moments only.
inline double entropy_shift(double mean_log_x, double mean_log_y, PositiveReal var_log_x,
                            PositiveReal var_log_y) {
  detail::require_usable_variance(var_log_x);
  detail::require_usable_variance(var_log_y);
  return (mean_log_y - mean_log_x) +
         0.5 * (std::log(var_log_y) - std::log(var_log_x));
}

inline double entropy_shift(const LogMoments& from, const LogMoments& to) {
  return entropy_shift(from.mean_log, to.mean_log, from.var_log, to.var_log);
}

}  // namespace logent
