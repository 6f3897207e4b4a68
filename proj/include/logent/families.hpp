#pragma once

#include <cmath>
#include <numbers>

#include "logent/common.hpp"

// Closed forms for the families outside the generalized gamma umbrella that
// the K-constant claims are checked against.  Each returns the triple
// (H, E[ln X], V[ln X]); k_from_moments recovers the constant in
// H = E[ln X] + ln(V[ln X])/2 + K.
//
// Uniform(0,1):        H = 0,                E[ln X] = -1,              V[ln X] = 1
// Pareto(alpha, x_m):  H = ln(x_m/alpha) + 1/alpha + 1,
//                      E[ln X] = ln x_m + 1/alpha,                     V[ln X] = 1/alpha^2
// Lognormal(mu, s):    H = mu + ln(2 pi e s^2)/2,  E[ln X] = mu,       V[ln X] = s^2
//
// Both Uniform and Pareto give K = 1 identically (for Pareto the alpha and
// x_m terms cancel pairwise), and the lognormal gives the maximal
// K = ln(2 pi e)/2 for its log-variance, which brackets the K band.

namespace logent {

struct FamilyMoments {
  double entropy = 0.0;
  double mean_log = 0.0;
  double var_log = 0.0;
};

inline double k_from_moments(const FamilyMoments& f) {
  return f.entropy - f.mean_log - 0.5 * std::log(f.var_log);
}

inline FamilyMoments uniform01_moments() { return {0.0, -1.0, 1.0}; }

inline FamilyMoments pareto_moments(PositiveReal alpha, PositiveReal x_min) {
  const double al = alpha, xm = x_min;
  return {std::log(xm / al) + 1.0 / al + 1.0, std::log(xm) + 1.0 / al, 1.0 / (al * al)};
}

inline FamilyMoments lognormal_moments(double mu, PositiveReal sigma) {
  const double s = sigma;
  return {mu + 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * s * s), mu, s * s};
}

}  // namespace logent
