#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "logent/estimator.hpp"
#include "logent/generalized_gamma.hpp"

using namespace logent;

namespace {
SampleBatch batch_of(std::vector<double> values) {
  return preprocess(values, PreprocessPolicy::reject);
}
}  // namespace

TEST_CASE("preprocess policies", "[estimator]") {
  SECTION("reject") {
    const SampleBatch b = preprocess(std::vector<double>{1, 2, 3}, PreprocessPolicy::reject);
    CHECK(b.shift == 0.0);
    CHECK(b.n_excluded == 0);
    CHECK(b.values == std::vector<double>{1, 2, 3});
    CHECK_THROWS_AS(preprocess(std::vector<double>{1, -1, 3}, PreprocessPolicy::reject),
                    data_error);
    CHECK_THROWS_AS(preprocess(std::vector<double>{1, 0, 3}, PreprocessPolicy::reject),
                    data_error);
  }

  SECTION("shift_min_exclude drops one minimum and shifts the rest") {
    const SampleBatch b =
        preprocess(std::vector<double>{-2, 1, 4}, PreprocessPolicy::shift_min_exclude);
    CHECK(b.values == std::vector<double>{3, 6});
    CHECK(b.shift == 2.0);
    CHECK(b.n_excluded == 1);
    // All-positive data pass through untouched.
    const SampleBatch ok =
        preprocess(std::vector<double>{1, 2}, PreprocessPolicy::shift_min_exclude);
    CHECK(ok.shift == 0.0);
    CHECK(ok.n_excluded == 0);
    // A tie with the minimum lands on zero after the shift and is excluded too.
    const SampleBatch tie =
        preprocess(std::vector<double>{-2, -2, 1, 4}, PreprocessPolicy::shift_min_exclude);
    CHECK(tie.values == std::vector<double>{3, 6});
    CHECK(tie.n_excluded == 2);
    // If exclusion leaves fewer than two distinct values, the batch is unusable.
    CHECK_THROWS_AS(preprocess(std::vector<double>{-2, -2, 1}, PreprocessPolicy::shift_min_exclude),
                    data_error);
  }

  SECTION("shift_epsilon keeps everything") {
    const std::vector<double> raw{-2, 1, 4};
    const SampleBatch b = preprocess(raw, PreprocessPolicy::shift_epsilon);
    CHECK(b.n_excluded == 0);
    CHECK(b.values.size() == 3);
    const double eps = 1e-9 * 6.0;
    CHECK_THAT(b.shift, Catch::Matchers::WithinAbs(2.0 + eps, 1e-18));
    for (double v : b.values) CHECK(v > 0.0);
    // Positive data: no shift at all.
    CHECK(preprocess(std::vector<double>{1, 2}, PreprocessPolicy::shift_epsilon).shift == 0.0);
  }

  SECTION("degenerate and empty inputs") {
    for (auto policy : {PreprocessPolicy::reject, PreprocessPolicy::shift_min_exclude,
                        PreprocessPolicy::shift_epsilon}) {
      CHECK_THROWS_AS(preprocess(std::vector<double>{0.5, 0.5, 0.5}, policy), data_error);
      CHECK_THROWS_AS(preprocess(std::vector<double>{}, policy), data_error);
    }
    // Nothing left once the single negative minimum is dropped.
    CHECK_THROWS_AS(preprocess(std::vector<double>{-1, -1}, PreprocessPolicy::shift_min_exclude),
                    data_error);
    CHECK_THROWS_AS(preprocess(std::vector<double>{1, std::nan("")}, PreprocessPolicy::reject),
                    data_error);
  }
}

TEST_CASE("log-moments by hand", "[estimator]") {
  const double e1margin = 1e-14;
  const double e = std::exp(1.0);
  const LogMoments m = estimate_log_moments(batch_of({e, e, e * e, e * e}));
  CHECK_THAT(m.mean_log, Catch::Matchers::WithinAbs(1.5, e1margin));
  CHECK_THAT(m.var_log, Catch::Matchers::WithinAbs(1.0 / 3.0, e1margin));
}

TEST_CASE("log-moments on seeded draws match closed forms", "[estimator][mc]") {
  const std::size_t n = 1000000;
  for (const GGParams& p : {GGParams{1, 1, 1}, GGParams{2, 2, 3}}) {
    CAPTURE(p.a, p.b, p.nu);
    const SampleBatch b = preprocess(gg_sample(p, n, 2024), PreprocessPolicy::reject);
    const LogMoments est = estimate_log_moments(b);
    const LogMoments exact = gg_log_moments(p);
    // SE of the mean is sd/sqrt(n); SE of the variance is below 2 v / sqrt(n)
    // for these shapes -- use generous 4 SE style bands.
    const double se_mean = std::sqrt(exact.var_log / static_cast<double>(n));
    CHECK(std::abs(est.mean_log - exact.mean_log) < 4.0 * se_mean);
    CHECK(std::abs(est.var_log - exact.var_log) < 8.0 * exact.var_log / std::sqrt(double(n)));
  }
}

TEST_CASE("entropy estimates with the right K", "[estimator][mc]") {
  const std::size_t n = 1000000;

  const SampleBatch exp_b = preprocess(gg_sample({1, 1, 1}, n, 555), PreprocessPolicy::reject);
  CHECK_THAT(estimate_entropy(exp_b, gg_K(1.0)), Catch::Matchers::WithinAbs(1.0, 0.01));

  rng_engine u_rng = make_engine(556);
  std::vector<double> uniform(n);
  for (double& v : uniform) v = uniform01(u_rng);
  const SampleBatch uni_b = preprocess(uniform, PreprocessPolicy::reject);
  CHECK_THAT(estimate_entropy(uni_b, 1.0), Catch::Matchers::WithinAbs(0.0, 0.01));

  rng_engine ln_rng = make_engine(557);
  std::vector<double> logn(n);
  for (double& v : logn) v = sample_lognormal(ln_rng);
  const SampleBatch ln_b = preprocess(logn, PreprocessPolicy::reject);
  CHECK_THAT(estimate_entropy(ln_b, k_lognormal),
             Catch::Matchers::WithinAbs(k_lognormal, 0.01));  // H = mu + ln(2 pi e)/2 at mu=0
}

TEST_CASE("the K band", "[estimator]") {
  const SampleBatch b = batch_of({1.0, 2.0, 3.0, 5.0});
  const EntropyBand band = estimate_entropy_banded(b);
  CHECK_THAT(band.high - band.low,
             Catch::Matchers::WithinAbs(k_lognormal - 1.0, 1e-12));  // 0.418939 wide
  CHECK(band.low == estimate_entropy(b, 1.0));
  CHECK(band.high == estimate_entropy(b, k_lognormal));
}

TEST_CASE("scale equivariance is exact in the data", "[estimator]") {
  const std::vector<double> raw{0.7, 1.3, 2.9, 11.0, 0.02};
  const SampleBatch base = batch_of(raw);
  for (double c : {0.001, 3.0, 1e6}) {
    CAPTURE(c);
    std::vector<double> scaled;
    for (double v : raw) scaled.push_back(c * v);
    const double shift = estimate_entropy(batch_of(scaled), 1.2) - estimate_entropy(base, 1.2);
    CHECK(std::abs(shift - std::log(c)) < 1e-10);
  }
}

TEST_CASE("power equivariance through entropy_shift", "[estimator]") {
  const std::vector<double> raw{0.7, 1.3, 2.9, 11.0, 0.02};
  const SampleBatch base = batch_of(raw);
  for (double b : {0.5, 2.0, 3.7}) {
    CAPTURE(b);
    std::vector<double> powered;
    for (double v : raw) powered.push_back(std::pow(v, b));
    const SampleBatch pw = batch_of(powered);
    const double diff = estimate_entropy(pw, 1.2) - estimate_entropy(base, 1.2);
    const double shift = entropy_shift(estimate_log_moments(base), estimate_log_moments(pw));
    CHECK(std::abs(diff - shift) < 1e-10);
  }
}

TEST_CASE("estimator error shrinks with n and has no downward drift", "[estimator][mc]") {
  // 20 replicates at each n; the identity is exact, so only sampling noise
  // remains, falling like 1/sqrt(n).  A plug-in estimator's hallmark bias
  // (increasingly negative with n) must be absent.
  const GGParams p{2, 2, 3};
  const double truth = gg_entropy(p);
  const double k = gg_K(p.nu);

  double prev_mean_abs = 1e300;
  for (std::size_t n : {std::size_t{1000}, std::size_t{10000}, std::size_t{100000},
                        std::size_t{1000000}}) {
    double sum_abs = 0.0, sum_signed = 0.0;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const SampleBatch b =
          preprocess(gg_sample(p, n, 7000 + rep), PreprocessPolicy::reject);
      const double err = estimate_entropy(b, k) - truth;
      sum_abs += std::abs(err);
      sum_signed += err;
    }
    const double mean_abs = sum_abs / 20.0;
    CAPTURE(n, mean_abs, sum_signed / 20.0);
    CHECK(mean_abs < prev_mean_abs);
    prev_mean_abs = mean_abs;
    // Mean signed error stays within a few typical deviations of zero.
    CHECK(std::abs(sum_signed / 20.0) < 4.0 * mean_abs);
  }
  // At n = 1e6 the error is far below any plug-in bias scale.
  CHECK(prev_mean_abs < 0.002);
}

TEST_CASE("estimate requires two values and positive data", "[estimator]") {
  SampleBatch tiny;
  tiny.values = {2.0};
  CHECK_THROWS_AS(estimate_log_moments(tiny), data_error);
  SampleBatch sneaky;
  sneaky.values = {1.0, -3.0};
  CHECK_THROWS_AS(estimate_log_moments(sneaky), data_error);
}
