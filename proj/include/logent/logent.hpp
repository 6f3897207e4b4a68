#pragma once

// Umbrella header: entropy and entropy variance through the statistics of
// the logarithmic variate, with the generalized gamma family as the worked
// analytic case and a Monte Carlo oracle for every closed form.

#include "logent/common.hpp"
#include "logent/entropy_variance.hpp"
#include "logent/estimator.hpp"
#include "logent/families.hpp"
#include "logent/generalized_gamma.hpp"
#include "logent/ingest.hpp"
#include "logent/mc.hpp"
#include "logent/rank.hpp"
#include "logent/reports.hpp"
#include "logent/rng.hpp"
#include "logent/specfun.hpp"
#include "logent/transform.hpp"
