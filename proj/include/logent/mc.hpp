#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "logent/common.hpp"
#include "logent/generalized_gamma.hpp"
#include "logent/rng.hpp"

// Monte Carlo oracle for the closed forms.  Every analytic quantity in the
// library (entropy, entropy variance, log-moments, the K constant) has a
// sampling estimator here with a defensible standard error, so agreement
// within a few SE is a real check and not a tautology.
//
// The generic entry points take a log-density and a one-draw sampler
// (double(rng_engine&)); overloads for GGParams wire in the family's exact
// density and sampler.  Determinism contract: a fixed (seed, n, partitions)
// triple produces bit-identical output everywhere; draws follow the
// sample_n substream rule, and the bootstrap behind the K standard error
// runs on substream `partitions` (the first one data never touches), so
// adding resamples cannot perturb the point estimates.

namespace logent {

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t partitions = 1;
};

namespace detail {

struct SampleStats {
  double mean = 0.0;
  double var = 0.0;  // unbiased, n-1
  double m4 = 0.0;   // fourth central moment (biased, 1/n)
};

inline SampleStats central_stats(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0, s4 = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    ss += d * d;
    s4 += d * d * d * d;
  }
  SampleStats st;
  st.mean = mean;
  st.var = ss / static_cast<double>(n - 1);
  st.m4 = s4 / static_cast<double>(n);
  return st;
}

// SE of a sample mean: sd / sqrt(n).
inline double mean_std_error(const SampleStats& st, std::size_t n) {
  return std::sqrt(st.var / static_cast<double>(n));
}

// Asymptotic SE of a sample variance: sqrt((m4 - var^2) / n).
inline double variance_std_error(const SampleStats& st, std::size_t n) {
  const double inner = st.m4 - st.var * st.var;
  return std::sqrt(std::max(inner, 0.0) / static_cast<double>(n));
}

inline void require_n(std::size_t n, std::size_t minimum, const char* who) {
  if (n < minimum)
    throw std::invalid_argument(std::string(who) + ": need at least " +
                                std::to_string(minimum) + " draws");
}

template <class LogDensity>
void map_log_density(LogDensity&& log_density, std::vector<double>& xs, const char* who) {
  for (double& x : xs) {
    x = log_density(x);
    if (!std::isfinite(x))
      throw data_error(std::string(who) + ": log-density is not finite at a sample point");
  }
}

}  // namespace detail

// H[X] ~ mean of -ln f(X_i).
template <class LogDensity, class Sampler>
  requires std::invocable<LogDensity&, double> && std::invocable<Sampler&, rng_engine&>
McEstimate mc_entropy(LogDensity&& log_density, Sampler&& sample_one, std::size_t n,
                      std::uint64_t seed, std::size_t partitions = 1) {
  detail::require_n(n, 100, "mc_entropy");
  std::vector<double> xs = sample_n(sample_one, n, seed, partitions);
  detail::map_log_density(log_density, xs, "mc_entropy");
  for (double& v : xs) v = -v;
  const auto st = detail::central_stats(xs);
  return {st.mean, detail::mean_std_error(st, n), n, seed, partitions};
}

// HV[X] ~ sample variance of ln f(X_i).
template <class LogDensity, class Sampler>
  requires std::invocable<LogDensity&, double> && std::invocable<Sampler&, rng_engine&>
McEstimate mc_hv(LogDensity&& log_density, Sampler&& sample_one, std::size_t n,
                 std::uint64_t seed, std::size_t partitions = 1) {
  detail::require_n(n, 100, "mc_hv");
  std::vector<double> xs = sample_n(sample_one, n, seed, partitions);
  detail::map_log_density(log_density, xs, "mc_hv");
  const auto st = detail::central_stats(xs);
  return {st.var, detail::variance_std_error(st, n), n, seed, partitions};
}

// (E[ln X], V[ln X]) with their respective standard errors.
template <class Sampler>
  requires std::invocable<Sampler&, rng_engine&>
std::pair<McEstimate, McEstimate> mc_log_moments(Sampler&& sample_one, std::size_t n,
                                                 std::uint64_t seed,
                                                 std::size_t partitions = 1) {
  detail::require_n(n, 100, "mc_log_moments");
  std::vector<double> xs = sample_n(sample_one, n, seed, partitions);
  for (double& x : xs) {
    if (!(x > 0.0)) throw data_error("mc_log_moments: sampler produced a non-positive value");
    x = std::log(x);
  }
  const auto st = detail::central_stats(xs);
  McEstimate mean{st.mean, detail::mean_std_error(st, n), n, seed, partitions};
  McEstimate var{st.var, detail::variance_std_error(st, n), n, seed, partitions};
  return {mean, var};
}

// GG-family conveniences: exact log-density + exact sampler.
inline McEstimate mc_entropy(const GGParams& p, std::size_t n, std::uint64_t seed,
                             std::size_t partitions = 1) {
  return mc_entropy([&p](double x) { return gg_log_pdf(p, x); },
                    [&p](rng_engine& rng) { return gg_sample_one(p, rng); }, n, seed, partitions);
}

inline McEstimate mc_hv(const GGParams& p, std::size_t n, std::uint64_t seed,
                        std::size_t partitions = 1) {
  return mc_hv([&p](double x) { return gg_log_pdf(p, x); },
               [&p](rng_engine& rng) { return gg_sample_one(p, rng); }, n, seed, partitions);
}

inline std::pair<McEstimate, McEstimate> mc_log_moments(const GGParams& p, std::size_t n,
                                                        std::uint64_t seed,
                                                        std::size_t partitions = 1) {
  return mc_log_moments([&p](rng_engine& rng) { return gg_sample_one(p, rng); }, n, seed,
                        partitions);
}

// K ~ \hat H - \hat E[ln X] - ln(\hat V[ln X]) / 2, one shared sample for
// all three ingredients, with the standard error taken from 200 bootstrap
// resamples (indices drawn with replacement from a dedicated substream).
// The shared sample captures the correlations between the ingredients
// without delta-method covariance bookkeeping.
inline McEstimate mc_K(const GGParams& p, std::size_t n, std::uint64_t seed,
                       std::size_t partitions = 1) {
  detail::require_n(n, 1000, "mc_K");
  const std::vector<double> xs = gg_sample(p, n, seed, partitions);

  std::vector<double> neg_logf(n), logx(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_logf[i] = -gg_log_pdf(p, xs[i]);
    logx[i] = std::log(xs[i]);
  }

  const auto k_of = [n](const std::vector<double>& nlf, const std::vector<double>& lx) {
    double h = 0.0, m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      h += nlf[i];
      m += lx[i];
    }
    h /= static_cast<double>(n);
    m /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += (lx[i] - m) * (lx[i] - m);
    const double v = ss / static_cast<double>(n - 1);
    if (v <= degenerate_variance_epsilon)
      throw data_error("mc_K: degenerate log-variance in sample");
    return h - m - 0.5 * std::log(v);
  };

  const double k_hat = k_of(neg_logf, logx);

  constexpr std::size_t n_boot = 200;
  rng_engine boot_eng = make_engine(seed, partitions);
  std::vector<double> boot_k;
  boot_k.reserve(n_boot);
  std::vector<double> b_nlf(n), b_lx(n);
  for (std::size_t b = 0; b < n_boot; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      auto idx = static_cast<std::size_t>(uniform01(boot_eng) * static_cast<double>(n));
      if (idx >= n) idx = n - 1;
      b_nlf[i] = neg_logf[idx];
      b_lx[i] = logx[idx];
    }
    boot_k.push_back(k_of(b_nlf, b_lx));
  }
  const auto bst = detail::central_stats(boot_k);
  return {k_hat, std::sqrt(bst.var), n, seed, partitions};
}

}  // namespace logent
