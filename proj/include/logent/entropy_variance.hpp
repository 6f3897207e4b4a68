#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logent/common.hpp"

// Entropy variance HV[X] = Var[ln f(X)], the second central moment of
// self-information, and how it moves under Y = a X^b.  Writing
// ln g'(x) = ln(ab) + (b-1) ln x into HV[Y] = HV[X] + V[ln g'] +
// E[-2 ln f ln g'] - 2 H[X] E[ln g'] and regrouping by powers of b:
//
//   HV[Y] = HV[X] + b^2 V[ln X]
//         + b (-2 V[ln X] + 2 E[ln f] E[ln X] - 2 E[ln f ln X])
//         + V[ln X] - 2 E[ln f] E[ln X] + 2 E[ln f ln X]
//
// The multiplier a drops out entirely: scaling a variate never changes
// its entropy variance.  Since b = sqrt(V[ln Y]/V[ln X]), the law can be
// driven by log-variances alone.

namespace logent {

// The expectations the transform law needs, for the base variate X with
// density f.  e_logf is E[ln f(X)] (= -H[X]), and e_logf_logx is the mixed
// moment E[ln f(X) * ln X].
struct CrossMoments {
  double e_logf = 0.0;
  double e_logx = 0.0;
  double e_logf_logx = 0.0;
  double var_logx = 0.0;
  double hv = 0.0;

  CrossMoments(double elf, double elx, double elfx, double vlx, double hvx)
      : e_logf(elf), e_logx(elx), e_logf_logx(elfx), var_logx(vlx), hv(hvx) {
    if (!std::isfinite(elf) || !std::isfinite(elx) || !std::isfinite(elfx))
      throw std::domain_error("cross moments must be finite");
    if (!std::isfinite(vlx) || vlx < 0.0) throw std::domain_error("V[ln X] must be >= 0");
    if (!std::isfinite(hvx) || hvx < 0.0) throw std::domain_error("HV[X] must be >= 0");
    // Cauchy-Schwarz on Cov(ln f, ln X); small slack for rounding.
    const double cov = e_logf_logx - e_logf * e_logx;
    const double bound = std::sqrt(hv * var_logx);
    if (std::fabs(cov) > bound * (1.0 + 1e-9) + 1e-12)
      throw std::domain_error("inconsistent cross moments: |Cov(ln f, ln X)| exceeds "
                              "sqrt(HV * V[ln X])");
  }
};

// HV[a X^b].  A result that is negative beyond rounding (< -1e-9) signals
// inconsistent cross moments and throws; tiny negatives are clamped to
// zero, reported through `clamped` when the caller passes it.
inline double hv_after_transform(const CrossMoments& cm, PositiveReal b,
                                 bool* clamped = nullptr) {
  if (clamped) *clamped = false;
  const double bb = b;
  const double linear = -2.0 * cm.var_logx + 2.0 * cm.e_logf * cm.e_logx - 2.0 * cm.e_logf_logx;
  const double constant = cm.var_logx - 2.0 * cm.e_logf * cm.e_logx + 2.0 * cm.e_logf_logx;
  double result = cm.hv + bb * bb * cm.var_logx + bb * linear + constant;
  if (result < 0.0) {
    if (result < -1e-9)
      throw std::domain_error("HV[aX^b] came out negative: cross moments are inconsistent");
    result = 0.0;
    if (clamped) *clamped = true;
  }
  return result;
}

// Same law with b eliminated via b = sqrt(V[ln Y] / V[ln X]).
inline double hv_after_transform_logvar_form(const CrossMoments& cm, PositiveReal var_log_y,
                                             bool* clamped = nullptr) {
  if (cm.var_logx <= degenerate_variance_epsilon)
    throw std::domain_error("V[ln X] is degenerate; cannot infer the exponent");
  return hv_after_transform(cm, std::sqrt(static_cast<double>(var_log_y) / cm.var_logx),
                            clamped);
}

// Exact cross moments of Exp(1), where ln f(x) = -x:
//   E[ln f] = -1, E[ln X] = -gamma, E[ln f ln X] = -E[X ln X] = -(1-gamma),
//   V[ln X] = pi^2/6, HV = Var[X] = 1.
inline CrossMoments exponential_cross_moments() {
  constexpr double pi_sq_6 = 1.644934066848226436;
  return {-1.0, -euler_gamma, -(1.0 - euler_gamma), pi_sq_6, 1.0};
}

// Sample estimates of H, HV and all cross moments from one batch: H is
// -mean(log_density), variances are unbiased (n-1), and the mixed moment
// is the raw product mean.  Two passes (means first, then centered
// accumulation) keep the variances stable.
template <class LogDensity>
std::pair<InfoMoments, CrossMoments> hv_from_sample(LogDensity&& log_density,
                                                    std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 2) throw data_error("need at least two samples");

  std::vector<double> logf(n), logx(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = samples[i];
    if (!std::isfinite(x) || x <= 0.0) throw data_error("samples must be positive");
    logf[i] = log_density(x);
    logx[i] = std::log(x);
    if (!std::isfinite(logf[i])) throw data_error("log-density is not finite at a sample point");
  }

  double mean_logf = 0.0, mean_logx = 0.0, mean_cross = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_logf += logf[i];
    mean_logx += logx[i];
    mean_cross += logf[i] * logx[i];
  }
  mean_logf /= static_cast<double>(n);
  mean_logx /= static_cast<double>(n);
  mean_cross /= static_cast<double>(n);

  double ss_logf = 0.0, ss_logx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double df = logf[i] - mean_logf;
    const double dx = logx[i] - mean_logx;
    ss_logf += df * df;
    ss_logx += dx * dx;
  }
  const double hv = ss_logf / static_cast<double>(n - 1);
  const double var_logx = ss_logx / static_cast<double>(n - 1);

  return {InfoMoments{-mean_logf, hv},
          CrossMoments{mean_logf, mean_logx, mean_cross, var_logx, hv}};
}

}  // namespace logent
