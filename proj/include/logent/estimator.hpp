#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "logent/common.hpp"
#include "logent/transform.hpp"

// Empirical pipeline: raw data -> positive sample -> (E[ln X], V[ln X]) ->
// entropy via H = E[ln X] + ln(V[ln X])/2 + K.  The estimator touches the
// data only through its logarithm, so it has none of the density-reckoning
// bias of plug-in entropy estimators.
//
// The identity is not shift-invariant, so any offset applied to make the
// data positive is recorded in the batch and reported, never silent.

namespace logent {

enum class PreprocessPolicy {
  reject,             // error on any non-positive value
  shift_min_exclude,  // drop one minimum <= 0, add its magnitude to the rest
  shift_epsilon,      // add |min| + 1e-9 * range when min <= 0; keep everything
};

struct SampleBatch {
  std::vector<double> values;  // all strictly positive after preprocessing
  double shift = 0.0;          // additive offset that was applied
  std::size_t n_excluded = 0;  // values removed by the policy
};

inline SampleBatch preprocess(std::span<const double> raw, PreprocessPolicy policy) {
  if (raw.empty()) throw data_error("no data");
  for (double v : raw)
    if (!std::isfinite(v)) throw data_error("data contains non-finite values");

  const auto [min_it, max_it] = std::minmax_element(raw.begin(), raw.end());
  const double min = *min_it, max = *max_it;
  if (min == max) throw data_error("degenerate data: all values are equal");

  SampleBatch batch;
  batch.values.reserve(raw.size());

  switch (policy) {
    case PreprocessPolicy::reject:
      if (min <= 0.0) throw data_error("data contains non-positive values (policy: reject)");
      batch.values.assign(raw.begin(), raw.end());
      break;

    case PreprocessPolicy::shift_min_exclude: {
      if (min > 0.0) {
        batch.values.assign(raw.begin(), raw.end());
        break;
      }
      batch.shift = -min;
      bool dropped_min = false;
      for (double v : raw) {
        if (!dropped_min && v == min) {
          dropped_min = true;
          ++batch.n_excluded;
          continue;
        }
        const double shifted = v + batch.shift;
        if (shifted <= 0.0)
          ++batch.n_excluded;  // ties with the minimum land on zero
        else
          batch.values.push_back(shifted);
      }
      break;
    }

    case PreprocessPolicy::shift_epsilon:
      if (min > 0.0) {
        batch.values.assign(raw.begin(), raw.end());
        break;
      }
      batch.shift = -min + 1e-9 * (max - min);
      for (double v : raw) batch.values.push_back(v + batch.shift);
      break;
  }

  if (batch.values.empty()) throw data_error("no data left after preprocessing");
  const auto [lo, hi] = std::minmax_element(batch.values.begin(), batch.values.end());
  if (*lo == *hi) throw data_error("degenerate data: all values are equal");
  return batch;
}

// Sample mean and unbiased (n-1) variance of ln(values).
inline LogMoments estimate_log_moments(const SampleBatch& batch) {
  const std::size_t n = batch.values.size();
  if (n < 2) throw data_error("need at least two values to estimate log-moments");

  std::vector<double> logs(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (batch.values[i] <= 0.0) throw data_error("batch contains non-positive values");
    logs[i] = std::log(batch.values[i]);
  }
  double mean = 0.0;
  for (double l : logs) mean += l;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double l : logs) ss += (l - mean) * (l - mean);
  const double var = ss / static_cast<double>(n - 1);
  if (var <= degenerate_variance_epsilon)
    throw data_error("degenerate data: zero variance of the log-variate");
  return {mean, var};
}

inline double estimate_entropy(const SampleBatch& batch, double k) {
  return entropy_from_log_moments(estimate_log_moments(batch), k);
}

// Distribution-agnostic band: K = 1 (uniform/Pareto floor) up to the
// lognormal maximum 0.5*ln(2 pi e); width 0.4189 nats, under 2/3 bit.
struct EntropyBand {
  double low = 0.0;
  double high = 0.0;
};

inline EntropyBand estimate_entropy_banded(const SampleBatch& batch) {
  const LogMoments m = estimate_log_moments(batch);
  return {entropy_from_log_moments(m, k_uniform_pareto),
          entropy_from_log_moments(m, k_lognormal)};
}

}  // namespace logent
