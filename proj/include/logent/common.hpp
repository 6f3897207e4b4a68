#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Core value types shared across the library, plus the named constants of
// the log-variate entropy identity  H[X] = E[ln X] + ln(V[ln X])/2 + K.
//
// All quantities are in nats unless a name says otherwise.

namespace logent {

inline constexpr double euler_gamma = 0.5772156649015328606;

// K for the uniform and Pareto families (exact).
inline constexpr double k_uniform_pareto = 1.0;

// K in the lognormal limit, 0.5*ln(2*pi*e); no common positive family is
// known to exceed it.
inline constexpr double k_lognormal = 1.418938533204672742;

// Distribution-agnostic default, roughly the middle of [1, 1.42].
inline constexpr double k_default = 1.2;

// Log-variances at or below this are treated as degenerate (point mass);
// ln(V[ln X])/2 diverges there and we surface an error instead of -inf.
inline constexpr double degenerate_variance_epsilon = 1e-300;

inline constexpr double nats_to_bits = 1.4426950408889634074;  // 1/ln 2

// Raised for unusable input data (empty files, degenerate samples, parse
// failures).  Distinct from std::domain_error / std::invalid_argument so
// callers can map it to a dedicated exit status.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strictly positive, finite real.  Implicit construction keeps call
// sites clean while rejecting bad values at the boundary.
class PositiveReal {
 public:
  PositiveReal(double value) : value_(value) {  // NOLINT(runtime/explicit)
    if (!std::isfinite(value) || value <= 0.0)
      throw std::domain_error("expected a strictly positive finite value, got " +
                              std::to_string(value));
  }
  operator double() const { return value_; }
  double value() const { return value_; }

 private:
  double value_;
};

// First two cumulants of ln X.
struct LogMoments {
  double mean_log = 0.0;  // E[ln X]
  double var_log = 0.0;   // V[ln X], >= 0

  LogMoments() = default;
  LogMoments(double mean, double var) : mean_log(mean), var_log(var) {
    if (!std::isfinite(mean) || !std::isfinite(var))
      throw std::domain_error("log-moments must be finite");
    if (var < 0.0) throw std::domain_error("V[ln X] must be non-negative");
  }
};

// The multiplier and exponent of the power transform g(x) = a*x^b.
// b < 0 is rejected: the square-root recovery of b can only produce
// positive exponents, and decreasing transforms are out of scope.
struct TransformParams {
  double a = 1.0;
  double b = 1.0;

  TransformParams(double mult, double expo) : a(mult), b(expo) {
    if (!std::isfinite(a) || a <= 0.0) throw std::domain_error("multiplier a must be > 0");
    if (!std::isfinite(b) || b <= 0.0) throw std::domain_error("exponent b must be > 0");
  }
};

// Entropy H = -E[ln f(X)] and entropy variance HV = Var[ln f(X)].
struct InfoMoments {
  double entropy = 0.0;           // nats
  double entropy_variance = 0.0;  // nats^2, >= 0

  InfoMoments() = default;
  InfoMoments(double h, double hv) : entropy(h), entropy_variance(hv) {
    if (!std::isfinite(h) || !std::isfinite(hv))
      throw std::domain_error("info moments must be finite");
    if (hv < 0.0) throw std::domain_error("entropy variance must be non-negative");
  }
};

}  // namespace logent
