#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tailpred/evt.hpp"
#include "tailpred/kde.hpp"
#include "tailpred/partition.hpp"
#include "tailpred/sim.hpp"

namespace tailpred {

// Distribution of next-slot interference conditioned on the current state:
// a renormalized Gaussian KDE below the exceedance threshold and a GPD tail
// above it.
struct ConditionalMixture {
  KdeModel bulk;
  TailModel tail;
  double bulk_mass = 0.0;  // 1 - tail.exceed_prob
  std::size_t sample_count = 0;
  bool tail_from_global = false;  // tail shape/scale pooled from the global fit
  bool from_global = false;       // entire model pooled (state had too few successors)
};

struct MixtureOptions {
  std::size_t num_states = 15;
  double exceed_percentile = 0.97;   // threshold quantile within each conditional sample
  std::size_t min_tail_fit = 10;     // exceedances required for a state-local GPD fit
  std::size_t min_state_samples = 4; // successors required for a state-local model
  PartitionScheme scheme = PartitionScheme::quantile;
};

// Quantile predictor for next-slot interference: partitions the observed
// interference range into quantile states and fits one bulk+tail mixture per
// state on that state's successor samples.
class MixturePredictor {
 public:
  static MixturePredictor train(const InterferenceTrace& trace, const MixtureOptions& options = {});

  // Smallest level with conditional CDF >= eta given the current observation.
  // Confidence levels up to the bulk mass resolve through the KDE; higher
  // levels extrapolate through the GPD tail.
  double predict_next(double current_inr, double eta) const;
  double predict_for_state(std::size_t state, double eta) const;

  double conditional_cdf(std::size_t state, double x) const;

  const StatePartition& partition() const { return partition_; }
  std::size_t num_states() const { return models_.size(); }
  const ConditionalMixture& state_model(std::size_t state) const { return models_.at(state); }
  const TailModel& global_tail() const { return global_tail_; }
  const MixtureOptions& options() const { return options_; }

  std::string to_json() const;
  static MixturePredictor from_json(std::string_view text);

 private:
  MixturePredictor(StatePartition partition, std::vector<ConditionalMixture> models,
                   TailModel global_tail, MixtureOptions options);

  StatePartition partition_;
  std::vector<ConditionalMixture> models_;
  TailModel global_tail_;
  MixtureOptions options_;
};

}  // namespace tailpred
