#include "tailpred/fbl.hpp"

#include <cmath>

#include "tailpred/errors.hpp"
#include "tailpred/math.hpp"

namespace tailpred {

namespace {
constexpr double kLog2E = 1.4426950408889634074;
}

double capacity(double gamma) {
  if (!(gamma >= 0.0)) fail(errc::invalid_argument, "capacity: gamma must be nonnegative");
  return std::log2(1.0 + gamma);
}

double dispersion(double gamma) {
  if (!(gamma >= 0.0)) fail(errc::invalid_argument, "dispersion: gamma must be nonnegative");
  double g1 = 1.0 + gamma;
  return kLog2E * kLog2E * (1.0 - 1.0 / (g1 * g1));
}

double sinr_from_inr(double snr, double inr) {
  if (!(snr > 0.0)) fail(errc::invalid_argument, "sinr_from_inr: snr must be positive");
  if (!(inr >= 0.0)) fail(errc::invalid_argument, "sinr_from_inr: inr must be nonnegative");
  return snr / (1.0 + inr);
}

double blocklength_real(std::uint32_t payload_bits, double target_outage, double gamma) {
  if (payload_bits < 1) fail(errc::invalid_argument, "blocklength_real: payload must be >= 1 bit");
  if (!(target_outage > 0.0 && target_outage <= 0.5))
    fail(errc::domain_error, "blocklength_real: target outage outside (0, 0.5]");
  if (!(gamma > 0.0)) fail(errc::infeasible_channel, "blocklength_real: nonpositive SINR");

  const double b = static_cast<double>(payload_bits);
  const double c = capacity(gamma);
  const double a = gaussian_q_inv(target_outage);
  if (a == 0.0) return b / c;
  const double v = dispersion(gamma);
  const double t = a * a * v;
  return b / c + t / (2.0 * c * c) * (1.0 + std::sqrt(1.0 + 4.0 * b * c / t));
}

AllocationDecision required_blocklength(const AllocationRequest& request, double gamma) {
  double m = blocklength_real(request.payload_bits, request.target_outage, gamma);
  AllocationDecision decision;
  decision.predicted_sinr = gamma;
  if (request.max_blocklength && m > *request.max_blocklength) {
    decision.capped = true;
    decision.blocklength_real = *request.max_blocklength;
    decision.blocklength = static_cast<std::uint64_t>(*request.max_blocklength);
  } else {
    decision.blocklength_real = m;
    decision.blocklength = static_cast<std::uint64_t>(std::ceil(m));
  }
  if (decision.blocklength < 1) decision.blocklength = 1;
  return decision;
}

double achieved_error_probability(double blocklength, std::uint32_t payload_bits, double gamma) {
  if (!(blocklength >= 1.0)) fail(errc::invalid_argument, "achieved_error_probability: blocklength < 1");
  if (!(gamma >= 0.0)) fail(errc::invalid_argument, "achieved_error_probability: negative SINR");
  const double b = static_cast<double>(payload_bits);
  if (gamma == 0.0) return b > 0.0 ? 1.0 : 0.5;
  const double c = capacity(gamma);
  const double v = dispersion(gamma);
  return gaussian_q((blocklength * c - b) / std::sqrt(blocklength * v));
}

}  // namespace tailpred
