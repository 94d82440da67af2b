#include "tailpred/evt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "tailpred/errors.hpp"
#include "tailpred/math.hpp"

namespace tailpred {

namespace {

constexpr double kShapeEps = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimizes f over two variables with Nelder-Mead; f may return +inf to
// encode infeasible points.
std::array<double, 2> nelder_mead2(const std::function<double(double, double)>& f,
                                   std::array<double, 2> start) {
  struct Vertex {
    std::array<double, 2> x;
    double fx;
  };
  std::array<Vertex, 3> s;
  s[0] = {start, f(start[0], start[1])};
  s[1] = {{start[0] + 0.5, start[1]}, 0.0};
  s[2] = {{start[0], start[1] + 0.25}, 0.0};
  s[1].fx = f(s[1].x[0], s[1].x[1]);
  s[2].fx = f(s[2].x[0], s[2].x[1]);

  auto order = [&] { std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; }); };
  order();

  for (int iter = 0; iter < 500; ++iter) {
    if (std::isfinite(s[0].fx) && std::isfinite(s[2].fx) &&
        s[2].fx - s[0].fx < 1e-12 * (1.0 + std::abs(s[0].fx)))
      break;

    std::array<double, 2> centroid{(s[0].x[0] + s[1].x[0]) * 0.5, (s[0].x[1] + s[1].x[1]) * 0.5};
    auto point = [&](double coef) {
      return std::array<double, 2>{centroid[0] + coef * (centroid[0] - s[2].x[0]),
                                   centroid[1] + coef * (centroid[1] - s[2].x[1])};
    };

    auto xr = point(1.0);
    double fr = f(xr[0], xr[1]);
    if (fr < s[0].fx) {
      auto xe = point(2.0);
      double fe = f(xe[0], xe[1]);
      s[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < s[1].fx) {
      s[2] = {xr, fr};
    } else {
      auto xc = point(fr < s[2].fx ? 0.5 : -0.5);
      double fc = f(xc[0], xc[1]);
      if (fc < std::min(fr, s[2].fx)) {
        s[2] = {xc, fc};
      } else {
        // Shrink toward the best vertex.
        for (int i = 1; i < 3; ++i) {
          s[i].x = {s[0].x[0] + 0.5 * (s[i].x[0] - s[0].x[0]),
                    s[0].x[1] + 0.5 * (s[i].x[1] - s[0].x[1])};
          s[i].fx = f(s[i].x[0], s[i].x[1]);
        }
      }
    }
    order();
  }
  return s[0].x;
}

}  // namespace

double gpd_cdf(double y, const GpdParams& params) {
  if (!(params.scale > 0.0)) fail(errc::invalid_argument, "gpd_cdf: scale must be positive");
  if (y <= 0.0) return 0.0;
  const double xi = params.shape;
  if (std::abs(xi) < kShapeEps) return -std::expm1(-y / params.scale);
  double z = 1.0 + xi * y / params.scale;
  if (z <= 0.0) return 1.0;  // beyond the finite support for xi < 0
  return 1.0 - std::pow(z, -1.0 / xi);
}

double tail_quantile(double eps, const TailModel& model) {
  if (!(eps > 0.0)) fail(errc::invalid_argument, "tail_quantile: eps must be positive");
  if (!(model.exceed_prob > 0.0 && model.exceed_prob < 1.0))
    fail(errc::invalid_argument, "tail_quantile: exceed_prob outside (0, 1)");
  if (eps > model.exceed_prob)
    fail(errc::quantile_below_threshold,
         "tail_quantile: eps above the exceedance probability; query the bulk model");
  const double xi = model.params.shape;
  const double ratio = model.exceed_prob / eps;
  double excess;
  if (std::abs(xi) < kShapeEps) {
    excess = model.params.scale * std::log(ratio);
  } else {
    excess = model.params.scale / xi * (std::pow(ratio, xi) - 1.0);
  }
  return model.threshold + std::max(excess, 0.0);
}

double gpd_log_likelihood(std::span<const double> exceedances, const GpdParams& params) {
  const double sigma = params.scale;
  const double xi = params.shape;
  if (!(sigma > 0.0)) return -kInf;
  const double m = static_cast<double>(exceedances.size());
  if (std::abs(xi) < kShapeEps) {
    double sum = 0.0;
    for (double y : exceedances) sum += y;
    return -m * std::log(sigma) - sum / sigma;
  }
  double acc = 0.0;
  for (double y : exceedances) {
    double z = 1.0 + xi * y / sigma;
    if (z <= 0.0) return -kInf;
    acc += std::log1p(xi * y / sigma);
  }
  return -m * std::log(sigma) - (1.0 + 1.0 / xi) * acc;
}

GpdParams fit_exponential_tail(std::span<const double> exceedances) {
  if (exceedances.empty()) fail(errc::insufficient_tail, "fit_exponential_tail: no exceedances");
  for (double y : exceedances)
    if (!(y > 0.0)) fail(errc::invalid_argument, "fit_exponential_tail: exceedances must be positive");
  return {mean(exceedances), 0.0};
}

GpdParams fit_gpd_mle(std::span<const double> exceedances, const GpdFitOptions& options) {
  if (exceedances.size() < options.min_exceedances)
    fail(errc::insufficient_tail, "fit_gpd_mle: need at least " +
                                      std::to_string(options.min_exceedances) + " exceedances, got " +
                                      std::to_string(exceedances.size()));
  double y_max = -kInf;
  double y_min = kInf;
  for (double y : exceedances) {
    if (!(y > 0.0)) fail(errc::invalid_argument, "fit_gpd_mle: exceedances must be positive");
    y_max = std::max(y_max, y);
    y_min = std::min(y_min, y);
  }
  if (y_max == y_min) fail(errc::degenerate_sample, "fit_gpd_mle: all exceedances identical");

  // Method-of-moments start (Hosking & Wallis).
  const double m1 = mean(exceedances);
  const double s2 = variance(exceedances);
  double xi0 = 0.5 * (1.0 - m1 * m1 / s2);
  double sigma0 = 0.5 * m1 * (m1 * m1 / s2 + 1.0);
  xi0 = std::clamp(xi0, -options.max_abs_shape, options.max_abs_shape);
  if (!(sigma0 > 0.0)) sigma0 = m1;
  if (xi0 < 0.0 && 1.0 + xi0 * y_max / sigma0 <= 0.0) {
    // Moment start lies outside the feasible region; restart near exponential.
    xi0 = 0.1;
    sigma0 = m1;
  }

  auto neg_ll = [&](double log_sigma, double xi) {
    if (std::abs(xi) > options.max_abs_shape || std::abs(log_sigma) > 300.0) return kInf;
    double ll = gpd_log_likelihood(exceedances, {std::exp(log_sigma), xi});
    return std::isfinite(ll) ? -ll : kInf;
  };

  auto best = nelder_mead2(neg_ll, {std::log(sigma0), xi0});
  GpdParams fitted{std::exp(best[0]), best[1]};
  if (std::abs(fitted.shape) < kShapeEps) fitted.shape = 0.0;

  // Never return a point below the initializer's likelihood.
  GpdParams init{sigma0, xi0};
  if (gpd_log_likelihood(exceedances, fitted) < gpd_log_likelihood(exceedances, init)) return init;
  return fitted;
}

}  // namespace tailpred
