#include "tailpred/math.hpp"

#include <algorithm>
#include <limits>

#include "tailpred/errors.hpp"

namespace tailpred {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::non_positive_value: return "NonPositiveValue";
    case errc::quantile_below_threshold: return "QuantileBelowThreshold";
    case errc::insufficient_tail: return "InsufficientTail";
    case errc::degenerate_sample: return "DegenerateSample";
    case errc::degenerate_partition: return "DegeneratePartition";
    case errc::insufficient_data: return "InsufficientData";
    case errc::infeasible_channel: return "InfeasibleChannel";
    case errc::domain_error: return "DomainError";
    case errc::io_error: return "IoError";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

namespace {

// Acklam's rational approximation for the inverse normal CDF.
double acklam_inv(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;

  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  double q = p - 0.5;
  double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_cdf_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(errc::domain_error, "normal_cdf_inv: p must lie in (0, 1)");
  double x = acklam_inv(p);
  // Halley refinement against the erfc-based CDF.
  for (int i = 0; i < 2; ++i) {
    double err = normal_cdf(x) - p;
    double pdf = normal_pdf(x);
    if (pdf <= 0.0) break;
    double u = err / pdf;
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double gaussian_q_inv(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(errc::domain_error, "gaussian_q_inv: p must lie in (0, 1)");
  return -normal_cdf_inv(p);
}

double mean(std::span<const double> xs) {
  if (xs.empty()) fail(errc::invalid_argument, "mean: empty range");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) fail(errc::invalid_argument, "variance: need at least two samples");
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) fail(errc::invalid_argument, "quantile_sorted: empty range");
  if (!(q >= 0.0 && q <= 1.0)) fail(errc::domain_error, "quantile_sorted: q outside [0, 1]");
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  double pos = q * static_cast<double>(n - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo >= n - 1) return sorted[n - 1];
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace tailpred
