#include "tailpred/sim.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "tailpred/errors.hpp"

namespace tailpred {

double duty_cycle(double mu, int zeta) {
  if (!(mu >= 0.0 && mu <= 1.0)) fail(errc::invalid_argument, "duty_cycle: mu outside [0, 1]");
  if (zeta < 1) fail(errc::invalid_argument, "duty_cycle: zeta must be >= 1");
  if (mu == 0.0) return 0.0;
  double z = static_cast<double>(zeta);
  return z / (z + 1.0 / mu);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) {
  if (!(lin > 0.0)) fail(errc::non_positive_value, "linear_to_db: value must be positive");
  return 10.0 * std::log10(lin);
}

RayleighFading::RayleighFading(int taps, std::mt19937_64& rng) {
  if (taps < 1) fail(errc::invalid_argument, "RayleighFading: taps must be >= 1");
  taps_.resize(static_cast<std::size_t>(taps));
  for (auto& t : taps_) t = {innov_(rng), innov_(rng)};
  refresh_sums();
}

void RayleighFading::refresh_sums() {
  sum_ = {0.0, 0.0};
  for (const auto& t : taps_) sum_ += t;
  steps_since_refresh_ = 0;
}

double RayleighFading::step(std::mt19937_64& rng) {
  std::complex<double> w{innov_(rng), innov_(rng)};
  sum_ += w - taps_[next_];
  taps_[next_] = w;
  next_ = (next_ + 1) % taps_.size();
  // Periodically rebuild the running sum to cancel floating-point drift.
  if (++steps_since_refresh_ >= 8192) refresh_sums();
  return std::norm(sum_) / static_cast<double>(taps_.size());
}

namespace {

void validate(const SimConfig& c) {
  if (c.num_interferers < 1) fail(errc::invalid_argument, "SimConfig: num_interferers must be >= 1");
  if (!(c.activation_factor >= 0.0 && c.activation_factor <= 1.0))
    fail(errc::invalid_argument, "SimConfig: activation_factor outside [0, 1]");
  if (c.message_duration < 1) fail(errc::invalid_argument, "SimConfig: message_duration must be >= 1");
  if (c.filter_length < 1) fail(errc::invalid_argument, "SimConfig: filter_length must be >= 1");
}

}  // namespace

InterferenceTrace generate_trace(const SimConfig& config, std::size_t length) {
  validate(config);
  if (length < 1) fail(errc::invalid_argument, "generate_trace: length must be >= 1");

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const int n = config.num_interferers;
  const double mu = config.activation_factor;
  const int zeta = config.message_duration;

  // Equal per-interferer power calibrated so the long-run trace mean hits the
  // configured aggregate INR.
  const double duty = duty_cycle(mu, zeta);
  const double power =
      duty > 0.0 ? db_to_linear(config.mean_inr_db) / (static_cast<double>(n) * duty) : 0.0;

  std::vector<RayleighFading> fading;
  fading.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) fading.emplace_back(config.filter_length, rng);
  std::vector<int> remaining(static_cast<std::size_t>(n), 0);

  const std::size_t warmup =
      static_cast<std::size_t>(std::max(config.filter_length, 10 * zeta));

  InterferenceTrace trace;
  trace.values.resize(length);

  for (std::size_t t = 0; t < warmup + length; ++t) {
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      double gain = fading[static_cast<std::size_t>(k)].step(rng);
      int& rem = remaining[static_cast<std::size_t>(k)];
      if (rem > 0) {
        total += power * gain;
        --rem;
      } else if (unif(rng) < mu) {
        // Message starts on the next slot; the current slot stays idle.
        rem = zeta;
      }
    }
    if (t >= warmup) trace.values[t - warmup] = total;
  }
  return trace;
}

void write_trace_csv(const InterferenceTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "write_trace_csv: cannot open " + path.string());
  out << "slot,inr_linear\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, trace.values[i]);
    out << buf;
  }
  if (!out) fail(errc::io_error, "write_trace_csv: write failed for " + path.string());
}

std::uint64_t trace_hash(const InterferenceTrace& trace) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (double v : trace.values) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

}  // namespace tailpred
