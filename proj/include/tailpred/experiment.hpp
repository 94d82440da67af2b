#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tailpred/partition.hpp"
#include "tailpred/sim.hpp"

namespace tailpred {

enum class Method { mixture, dtmc, genie };
const char* method_name(Method m);

// One experiment: draw mean-INR values, generate a training+runtime trace per
// draw (the runtime continues the training stream), train the requested
// predictors, allocate per mini-slot, and score every method on identical
// realizations.
struct ExperimentConfig {
  SimConfig sim;  // template; mean_inr_db, activation_factor and seed are set per draw
  std::size_t num_inr_draws = 100;
  std::array<double, 2> inr_range_db{-10.0, 5.0};
  // Per-draw uniform activation factor; unset keeps sim.activation_factor fixed.
  std::optional<std::array<double, 2>> mu_range = std::array<double, 2>{0.4, 1.0};
  std::size_t training_samples = 1000;
  std::size_t runtime_slots = 100000;
  std::size_t num_states = 15;  // "L" in config files
  double exceed_percentile = 0.97;
  std::vector<double> confidence_levels{0.95, 0.99};
  std::vector<double> target_outages{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  std::uint32_t payload_bits = 50;
  std::optional<double> max_blocklength = {};
  std::vector<Method> methods{Method::mixture, Method::dtmc, Method::genie};
  std::uint64_t master_seed = 20260801;
  std::size_t refit_every = 0;  // trailing-window batch refit period in slots; 0 = off
  unsigned threads = 0;         // worker threads over draws; 0 = hardware concurrency
  PartitionScheme partition_scheme = PartitionScheme::quantile;
};

struct TrialResult {
  Method method;
  double eta;  // 1 for the genie
  double target_outage;
  double achieved_outage;        // mean per-slot analytic error probability
  double underprediction_rate;   // fraction of slots with predicted < actual
  double mean_blocklength;
  double resource_ratio;         // mean blocklength over the genie's, same draw
  double capped_fraction;
  double inr_db;
  std::uint64_t seed;  // per-draw generator seed
  std::size_t draw_index;
};

struct AggregateResult {
  Method method;
  double eta;
  double target_outage;
  double mean_achieved_outage;
  double achieved_outage_p9999;  // pooled per-slot percentile across draws
  double mean_resource_ratio;
  double mean_blocklength;
  double mean_underprediction_rate;
  double mean_capped_fraction;
  std::size_t draws = 0;
};

struct DrawFailure {
  std::size_t draw_index;
  std::uint64_t seed;
  double inr_db;
  std::string reason;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialResult> trials;
  std::vector<AggregateResult> aggregates;
  std::vector<DrawFailure> failures;
  std::vector<std::uint64_t> draw_hashes;  // trace hash per successful draw, draw order
  std::size_t draws_used = 0;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

struct SweepEntry {
  std::size_t training_samples;
  ExperimentReport report;
};

// Repeats the experiment varying only the training size; per-draw seeds stay
// fixed, so every size sees the same generator streams.
std::vector<SweepEntry> sweep_training_sizes(const ExperimentConfig& config,
                                             std::span<const std::size_t> sizes);

std::string trials_csv(const ExperimentReport& report);
std::string summary_json(const ExperimentReport& report);

// Writes trials.csv and summary.json into `dir`; byte-stable per config.
void emit_report(const ExperimentReport& report, const std::filesystem::path& dir);

// Writes training_<size>/ reports plus a combined sweep_summary.json.
void emit_sweep(std::span<const SweepEntry> entries, const std::filesystem::path& dir);

ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig& config);

void apply_quick_profile(ExperimentConfig& config);  // 10 draws x 10^4 slots
void apply_full_profile(ExperimentConfig& config);   // 100 draws x 10^5 slots

std::uint64_t draw_seed(std::uint64_t master_seed, std::size_t draw_index);

}  // namespace tailpred
