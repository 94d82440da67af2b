#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

namespace tailpred {

struct SimConfig {
  int num_interferers = 5;
  double activation_factor = 0.4;  // chance an idle interferer starts a message, per mini-slot
  int message_duration = 10;       // mini-slots per message
  int filter_length = 100;         // fading filter taps; 1 gives i.i.d. per-slot fading
  double mean_inr_db = 0.0;        // long-run aggregate INR of the trace
  double mean_snr_db = 20.0;       // desired-link SNR, consumed downstream for SINR
  std::uint64_t seed = 1;
};

// Aggregate linear-scale INR per mini-slot, noise power normalized to 1.
struct InterferenceTrace {
  std::vector<double> values;
  std::size_t length() const { return values.size(); }
};

// Long-run fraction of time an interferer transmits under the on/off renewal
// model: geometric idle with mean 1/mu followed by a fixed zeta-slot message.
double duty_cycle(double mu, int zeta);

double db_to_linear(double db);
double linear_to_db(double lin);

// Unit-mean exponential fading power with temporal correlation: the complex
// channel coefficient is an equal-tap moving average of length `taps` over
// i.i.d. circularly-symmetric Gaussian innovations, advanced one innovation
// per step.
class RayleighFading {
 public:
  RayleighFading(int taps, std::mt19937_64& rng);

  // Advances one mini-slot and returns the fading power |h|^2.
  double step(std::mt19937_64& rng);

 private:
  void refresh_sums();

  std::vector<std::complex<double>> taps_;
  std::complex<double> sum_;
  std::size_t next_ = 0;
  std::size_t steps_since_refresh_ = 0;
  std::normal_distribution<double> innov_{0.0, 0.7071067811865475244};
};

// Generates `length` post-warm-up mini-slots. Deterministic per config.
InterferenceTrace generate_trace(const SimConfig& config, std::size_t length);

void write_trace_csv(const InterferenceTrace& trace, const std::filesystem::path& path);

// FNV-1a over the raw slot values; used for paired-fairness checks.
std::uint64_t trace_hash(const InterferenceTrace& trace);

}  // namespace tailpred
