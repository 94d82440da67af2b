#pragma once

#include <cstdint>
#include <optional>

namespace tailpred {

// Shannon capacity of the AWGN channel, bits per channel use.
double capacity(double gamma);

// Channel dispersion (log2 e)^2 * (1 - (1+gamma)^-2), bits^2 per channel use.
double dispersion(double gamma);

// SINR from the desired-link SNR and the interference-to-noise ratio.
double sinr_from_inr(double snr, double inr);

struct AllocationRequest {
  std::uint32_t payload_bits = 50;
  double target_outage = 1e-5;                  // in (0, 0.5]
  std::optional<double> max_blocklength = {};   // channel-use cap, unset = unlimited
};

struct AllocationDecision {
  std::uint64_t blocklength = 0;     // integer channel uses (ceiling of the real solution)
  double blocklength_real = 0.0;     // continuous normal-approximation solution
  double predicted_sinr = 0.0;
  bool capped = false;
};

// Continuous blocklength solving the normal approximation
// b = M*C - Qinv(eps)*sqrt(M*V) for the given payload and SINR.
double blocklength_real(std::uint32_t payload_bits, double target_outage, double gamma);

AllocationDecision required_blocklength(const AllocationRequest& request, double gamma);

// Decoding error probability of `payload_bits` over `blocklength` channel
// uses at the realized SINR; accepts fractional blocklengths.
double achieved_error_probability(double blocklength, std::uint32_t payload_bits, double gamma);

}  // namespace tailpred
