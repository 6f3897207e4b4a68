#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "logent/common.hpp"

// Seeded sampling primitives.  Everything below is built from
// std::mt19937_64 plus our own arithmetic, so a (seed, substream) pair
// yields the same draws on any conforming platform.
//
// Substream rule: substream k of master seed s is seeded with the
// (k+1)-th output of a SplitMix64 generator whose state starts at s.
// Parallel consumers must take one substream each and never share one.

namespace logent {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t substream) {
  std::uint64_t state = master_seed;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= substream; ++i) out = splitmix64_next(state);
  return out;
}

using rng_engine = std::mt19937_64;

inline rng_engine make_engine(std::uint64_t master_seed, std::uint64_t substream = 0) {
  return rng_engine(substream_seed(master_seed, substream));
}

// Uniform on the open interval (0, 1), 53-bit resolution; never returns
// an endpoint, so logs of draws are always finite.
inline double uniform01(rng_engine& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

inline double sample_exponential(rng_engine& rng) { return -std::log(uniform01(rng)); }

// Box-Muller (cosine branch only, so the draw count per call is fixed).
inline double sample_normal(rng_engine& rng) {
  const double r = std::sqrt(-2.0 * std::log(uniform01(rng)));
  return r * std::cos(2.0 * std::numbers::pi * uniform01(rng));
}

inline double sample_lognormal(rng_engine& rng, double mu = 0.0, double sigma = 1.0) {
  return std::exp(mu + sigma * sample_normal(rng));
}

inline double sample_pareto(rng_engine& rng, PositiveReal alpha, PositiveReal x_min) {
  return static_cast<double>(x_min) * std::pow(uniform01(rng), -1.0 / alpha);
}

// n draws of `sample_one(rng_engine&)`, split over `partitions` substreams
// of `seed`: substream k serves partition k, and the first n % partitions
// partitions hold one extra draw.  The result depends only on the
// (n, seed, partitions) triple, never on how partitions are scheduled.
template <class Sampler>
  requires std::invocable<Sampler&, rng_engine&>
std::vector<double> sample_n(Sampler&& sample_one, std::size_t n, std::uint64_t seed,
                             std::size_t partitions = 1) {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  if (partitions < 1) throw std::invalid_argument("partition count must be >= 1");
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t part = 0; part < partitions; ++part) {
    std::size_t count = n / partitions + (part < n % partitions ? 1 : 0);
    rng_engine rng = make_engine(seed, part);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_one(rng));
  }
  return out;
}

// Gamma(shape, 1) via Marsaglia & Tsang (2000).  Shapes below one use the
// boost G_shape = G_{shape+1} * U^{1/shape}.
inline double sample_gamma(rng_engine& rng, PositiveReal shape) {
  double k = shape;
  double boost = 1.0;
  if (k < 1.0) {
    boost = std::pow(uniform01(rng), 1.0 / k);
    k += 1.0;
  }
  const double d = k - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return boost * d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return boost * d * v;
  }
}

}  // namespace logent
