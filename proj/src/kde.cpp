#include "tailpred/kde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tailpred/errors.hpp"
#include "tailpred/math.hpp"

namespace tailpred {

KdeModel::KdeModel(std::vector<double> samples, double kernel_variance)
    : samples_(std::move(samples)), kernel_variance_(kernel_variance) {
  if (samples_.empty()) fail(errc::invalid_argument, "KdeModel: samples must be non-empty");
  if (!(kernel_variance_ > 0.0)) fail(errc::invalid_argument, "KdeModel: kernel variance must be positive");
  bandwidth_ = std::sqrt(kernel_variance_);
  auto [lo, hi] = std::minmax_element(samples_.begin(), samples_.end());
  min_sample_ = *lo;
  max_sample_ = *hi;
}

double KdeModel::select_bandwidth(std::span<const double> samples) {
  if (samples.size() < 2) fail(errc::degenerate_sample, "select_bandwidth: need at least two samples");
  const double sd = std::sqrt(variance(samples));
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  if (!(spread > 0.0)) fail(errc::degenerate_sample, "select_bandwidth: zero-variance samples");
  double h = 1.06 * spread * std::pow(static_cast<double>(samples.size()), -0.2);
  return h * h;
}

KdeModel KdeModel::fit(std::vector<double> samples) {
  double t = select_bandwidth(samples);
  return KdeModel(std::move(samples), t);
}

double KdeModel::pdf(double x) const {
  double acc = 0.0;
  for (double s : samples_) acc += normal_pdf((x - s) / bandwidth_);
  return acc / (bandwidth_ * static_cast<double>(samples_.size()));
}

double KdeModel::cdf(double x) const {
  double acc = 0.0;
  for (double s : samples_) acc += normal_cdf((x - s) / bandwidth_);
  return acc / static_cast<double>(samples_.size());
}

double KdeModel::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) fail(errc::domain_error, "KdeModel::quantile: p outside (0, 1)");
  double lo = min_sample_ - 6.0 * bandwidth_;
  double hi = max_sample_ + 6.0 * bandwidth_;
  while (cdf(lo) > p) lo -= 4.0 * bandwidth_;
  while (cdf(hi) < p) hi += 4.0 * bandwidth_;
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    double c = cdf(mid);
    if (std::abs(c - p) <= 1e-12) break;
    (c < p ? lo : hi) = mid;
    if (hi - lo <= std::numeric_limits<double>::epsilon() * (1.0 + std::abs(mid))) break;
  }
  return mid;
}

}  // namespace tailpred
