#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "logent/generalized_gamma.hpp"
#include "logent/mc.hpp"
#include "oracle.hpp"

using namespace logent;

namespace {
constexpr double sqrt2 = 1.4142135623730950488;
constexpr double euler_e = 2.718281828459045235;

const std::vector<double> grid_a{0.5, 1.0, 2.0, euler_e};
const std::vector<double> grid_b{0.25, 1.0, 2.0, 3.0};
const std::vector<double> grid_nu{0.1, 0.5, 1.0, 2.0, 10.0};
}  // namespace

TEST_CASE("density spot values", "[gg]") {
  // Exp(1) at 1, half-normal 2*phi(0.5) at 0.5, Gamma(2) at 2.
  CHECK_THAT(gg_pdf({1, 1, 1}, 1.0),
             Catch::Matchers::WithinAbs(0.36787944117144233, 1e-14));
  CHECK_THAT(gg_pdf({sqrt2, 2, 0.5}, 0.5),
             Catch::Matchers::WithinAbs(0.7041306535285989555, 1e-13));
  CHECK_THAT(gg_pdf({1, 1, 2}, 2.0),
             Catch::Matchers::WithinAbs(0.2706705664732253838, 1e-14));
  CHECK_THROWS_AS(gg_pdf({1, 1, 1}, 0.0), std::domain_error);
  CHECK_THROWS_AS(gg_log_pdf({1, 1, 1}, -2.0), std::domain_error);
}

TEST_CASE("entropy spot values", "[gg]") {
  CHECK_THAT(gg_entropy({1, 1, 1}), Catch::Matchers::WithinAbs(1.0, 1e-13));
  // Half-normal closed form is ln(pi e / 2)/2; the source text's prose total
  // 0.735775 for this case is off by 0.00998 and is rejected by sampling
  // (see verify + acceptance).
  CHECK_THAT(gg_entropy({sqrt2, 2, 0.5}),
             Catch::Matchers::WithinAbs(0.7257913526447274324, 1e-13));
  CHECK_THAT(gg_entropy({2, 1, 1}), Catch::Matchers::WithinAbs(1.6931471805599453, 1e-13));
  CHECK_THAT(gg_entropy({2, 2, 3}), Catch::Matchers::WithinAbs(1.386186342813777461, 1e-13));
  CHECK_THAT(gg_entropy({2, 1, 2}), Catch::Matchers::WithinAbs(2.27036284546147817, 1e-13));
}

TEST_CASE("log-moment spot values", "[gg]") {
  const LogMoments exp1 = gg_log_moments({1, 1, 1});
  CHECK_THAT(exp1.mean_log, Catch::Matchers::WithinAbs(-0.5772156649015328606, 1e-13));
  CHECK_THAT(exp1.var_log, Catch::Matchers::WithinAbs(1.644934066848226436, 1e-13));

  const LogMoments hn = gg_log_moments({sqrt2, 2, 0.5});
  CHECK_THAT(hn.mean_log, Catch::Matchers::WithinAbs(-0.635181422730739085, 1e-13));
  CHECK_THAT(hn.var_log, Catch::Matchers::WithinAbs(1.233700550136169827, 1e-13));

  const LogMoments g2 = gg_log_moments({1, 1, 2});
  CHECK_THAT(g2.mean_log, Catch::Matchers::WithinAbs(0.4227843350984671394, 1e-13));
  CHECK_THAT(g2.var_log, Catch::Matchers::WithinAbs(0.6449340668482264365, 1e-13));
}

TEST_CASE("K spot values against the published table", "[gg]") {
  CHECK_THAT(gg_K(1.0), Catch::Matchers::WithinAbs(1.32841, 2e-3));
  CHECK_THAT(gg_K(2.0), Catch::Matchers::WithinAbs(1.37375, 2e-3));
  CHECK_THAT(gg_K(0.5), Catch::Matchers::WithinAbs(1.25596, 2e-3));
  // High-precision values, frozen from mpmath.
  CHECK_THAT(gg_K(1.0), Catch::Matchers::WithinAbs(1.328365513666160187, 1e-12));
  CHECK_THAT(gg_K(2.0), Catch::Matchers::WithinAbs(1.373734924479124437, 1e-12));
  CHECK_THAT(gg_K(3.0), Catch::Matchers::WithinAbs(1.389312398957135173, 1e-12));
  CHECK_THAT(gg_K(0.5), Catch::Matchers::WithinAbs(1.255963660365984307, 1e-12));
}

TEST_CASE("entropy identity H = E[ln X] + ln(V[ln X])/2 + K over the grid", "[gg]") {
  for (double a : grid_a)
    for (double b : grid_b)
      for (double nu : grid_nu) {
        CAPTURE(a, b, nu);
        const GGParams p{a, b, nu};
        const LogMoments m = gg_log_moments(p);
        const double reassembled = m.mean_log + 0.5 * std::log(m.var_log) + gg_K(nu);
        CHECK(std::abs(gg_entropy(p) - reassembled) < 1e-10);
      }
}

TEST_CASE("K depends on nu alone", "[gg]") {
  for (double nu : grid_nu) {
    CAPTURE(nu);
    double lo = 1e300, hi = -1e300;
    for (double a : grid_a)
      for (double b : grid_b) {
        const GGParams p{a, b, nu};
        const LogMoments m = gg_log_moments(p);
        const double k = gg_entropy(p) - m.mean_log - 0.5 * std::log(m.var_log);
        lo = std::min(lo, k);
        hi = std::max(hi, k);
      }
    CHECK(hi - lo < 1e-10);
  }
}

TEST_CASE("K limits: toward ln(2 pi e)/2 as nu grows, toward 1 as nu -> 0", "[gg]") {
  CHECK_THAT(gg_K(30.0), Catch::Matchers::WithinAbs(1.41704, 2e-3));
  CHECK_THAT(gg_K(0.001), Catch::Matchers::WithinAbs(1.00105, 1e-4));
  double prev = gg_K(0.001);
  for (double nu : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0, 1000.0}) {
    const double k = gg_K(nu);
    CHECK(k > prev);            // increasing
    CHECK(k < k_lognormal);     // never exceeds the lognormal limit
    prev = k;
  }
  CHECK_THAT(gg_K(1000.0), Catch::Matchers::WithinAbs(k_lognormal, 1e-3));
}

TEST_CASE("pdf normalization by quadrature", "[gg]") {
  for (double a : grid_a)
    for (double b : grid_b)
      for (double nu : grid_nu) {
        CAPTURE(a, b, nu);
        CHECK(std::abs(oracle::gg_normalization({a, b, nu}) - 1.0) < 1e-6);
      }
}

TEST_CASE("closed forms agree with quadrature", "[gg]") {
  for (const GGParams& p :
       {GGParams{1, 1, 1}, GGParams{sqrt2, 2, 0.5}, GGParams{2, 1, 2}, GGParams{2, 2, 3},
        GGParams{0.5, 0.25, 0.1}, GGParams{euler_e, 3, 10}}) {
    CAPTURE(p.a, p.b, p.nu);
    const LogMoments m = gg_log_moments(p);
    CHECK(std::abs(oracle::gg_entropy_quadrature(p) - gg_entropy(p)) < 1e-8);
    CHECK(std::abs(oracle::gg_mean_log_quadrature(p) - m.mean_log) < 1e-8);
    CHECK(std::abs(oracle::gg_var_log_quadrature(p) - m.var_log) < 1e-8);
  }
}

TEST_CASE("special cases", "[gg]") {
  auto expect = [](const GGParams& p, double a, double b, double nu) {
    CHECK(p.a == a);
    CHECK(p.b == b);
    CHECK(p.nu == nu);
  };
  expect(gg_special_case(SpecialCase::exponential), 1, 1, 1);
  expect(gg_special_case(SpecialCase::half_normal), sqrt2, 2, 0.5);
  expect(gg_special_case(SpecialCase::chi_square, 4), 2, 1, 2);
  expect(gg_special_case(SpecialCase::chi, 3), sqrt2, 2, 1.5);
  expect(gg_special_case(SpecialCase::weibull, 2.5), 1, 2.5, 1);
  expect(gg_special_case(SpecialCase::gamma, 7), 1, 1, 7);
  // chi with k=1 degree of freedom is the half-normal.
  expect(gg_special_case(SpecialCase::chi, 1), sqrt2, 2, 0.5);
}

TEST_CASE("sampler determinism", "[gg]") {
  const GGParams p{2, 2, 3};
  CHECK(gg_sample(p, 5, 99) == gg_sample(p, 5, 99));
  CHECK(gg_sample(p, 5, 99) != gg_sample(p, 5, 100));
  // Partitioned sampling is deterministic too, but reorders the stream.
  CHECK(gg_sample(p, 1000, 7, 4) == gg_sample(p, 1000, 7, 4));
}

TEST_CASE("sampler matches closed forms at n = 1e6", "[gg][mc]") {
  const std::size_t n = 1000000;

  // Exp(1): sample mean within 4/sqrt(n) of 1.
  {
    const std::vector<double> xs = gg_sample({1, 1, 1}, n, 42);
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    CHECK(std::abs(mean - 1.0) < 4.0 / std::sqrt(static_cast<double>(n)));
  }

  // Half-normal: empirical E[ln X] within 4 SE of the closed form.
  {
    const auto [mean_est, var_est] = mc_log_moments(GGParams{sqrt2, 2, 0.5}, n, 7);
    CHECK(std::abs(mean_est.value - (-0.635181422730739085)) < 4.0 * mean_est.std_error);
    CHECK(std::abs(var_est.value - 1.233700550136169827) < 4.0 * var_est.std_error);
  }

  // Small and large shape exercise both gamma-sampler branches.
  for (const GGParams& p : {GGParams{1, 1, 0.35}, GGParams{2, 0.5, 6}}) {
    CAPTURE(p.a, p.b, p.nu);
    const auto [mean_est, var_est] = mc_log_moments(p, n, 11);
    const LogMoments m = gg_log_moments(p);
    CHECK(std::abs(mean_est.value - m.mean_log) < 4.0 * mean_est.std_error);
    CHECK(std::abs(var_est.value - m.var_log) < 4.0 * var_est.std_error);
  }
}

TEST_CASE("parameter validation", "[gg]") {
  CHECK_THROWS_AS(GGParams(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(GGParams(1, -2, 1), std::domain_error);
  CHECK_THROWS_AS(GGParams(1, 1, 0), std::domain_error);
  CHECK_THROWS_AS(gg_K(-1.0), std::domain_error);
}
