#pragma once

#include <cstddef>
#include <span>

namespace tailpred {

struct GpdParams {
  double scale = 1.0;  // sigma_u > 0
  double shape = 0.0;  // xi, unconstrained sign
};

// Peaks-over-threshold tail: exceedances of `threshold` follow a GPD, and the
// threshold itself is exceeded with probability `exceed_prob`.
struct TailModel {
  double threshold = 0.0;
  double exceed_prob = 0.0;
  GpdParams params;
  std::size_t num_exceedances = 0;
};

// CDF of the exceedance y >= 0. Uses the exponential limit for |shape| below
// 1e-6 and saturates at 1 beyond the finite support when shape < 0.
double gpd_cdf(double y, const GpdParams& params);

// Level exceeded with probability eps (requires eps <= exceed_prob); the
// complementary query belongs to the bulk model.
double tail_quantile(double eps, const TailModel& model);

struct GpdFitOptions {
  std::size_t min_exceedances = 10;
  double max_abs_shape = 5.0;
};

// Maximum-likelihood GPD fit on positive exceedances (already shifted by the
// threshold). Nelder-Mead over (log scale, shape) from a method-of-moments
// start; the result never has lower likelihood than the start.
GpdParams fit_gpd_mle(std::span<const double> exceedances, const GpdFitOptions& options = {});

// Exponential-tail fit (shape pinned to 0); defined from a single exceedance.
// Used when too few exceedances exist for the two-parameter fit.
GpdParams fit_exponential_tail(std::span<const double> exceedances);

double gpd_log_likelihood(std::span<const double> exceedances, const GpdParams& params);

}  // namespace tailpred
