#pragma once

#include <span>
#include <vector>

namespace tailpred {

// Gaussian-kernel density over a fixed sample set. `kernel_variance` is the
// variance T of the kernel, i.e. the squared bandwidth.
class KdeModel {
 public:
  KdeModel(std::vector<double> samples, double kernel_variance);

  // Silverman rule of thumb (robust variant), returned as a variance:
  // T = (1.06 * min(std, IQR/1.34) * n^(-1/5))^2.
  static double select_bandwidth(std::span<const double> samples);

  // Fits with the default bandwidth rule.
  static KdeModel fit(std::vector<double> samples);

  double pdf(double x) const;
  double cdf(double x) const;

  // Inverse CDF by bisection; |cdf(result) - p| <= 1e-9.
  double quantile(double p) const;

  const std::vector<double>& samples() const { return samples_; }
  double kernel_variance() const { return kernel_variance_; }

 private:
  std::vector<double> samples_;
  double kernel_variance_;
  double bandwidth_;  // sqrt(kernel_variance_)
  double min_sample_;
  double max_sample_;
};

}  // namespace tailpred
