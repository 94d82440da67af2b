#pragma once

#include <cmath>
#include <cstdint>
#include <span>

namespace tailpred {

inline double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

// Upper-tail probability of the standard normal.
inline double gaussian_q(double x) { return 0.5 * std::erfc(x * 0.7071067811865475244); }

// Inverse of gaussian_q. Rational initial guess refined by Halley steps on the
// erfc-based CDF, accurate to a few ulp across both tails.
double gaussian_q_inv(double p);

// Inverse standard-normal CDF (gaussian_q_inv(p) == -normal_cdf_inv(p)).
double normal_cdf_inv(double p);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased (n-1)

// Linear-interpolation empirical quantile on an ascending-sorted range.
double quantile_sorted(std::span<const double> sorted, double q);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace tailpred
