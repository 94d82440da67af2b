#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tailpred/partition.hpp"
#include "tailpred/sim.hpp"

namespace tailpred {

// First-order Markov-chain baseline on the same quantile discretization as the
// mixture predictor: empirical state-transition matrix, predicting the upper
// boundary of the eta-quantile successor state.
class DtmcPredictor {
 public:
  static DtmcPredictor train(const InterferenceTrace& trace, std::size_t levels);

  double predict_next(double current_inr, double eta) const;
  double predict_for_state(std::size_t state, double eta) const;

  const StatePartition& partition() const { return partition_; }
  std::size_t num_states() const { return bounds_.size(); }
  const std::vector<std::vector<double>>& transitions() const { return transitions_; }
  const std::vector<double>& state_upper_bounds() const { return bounds_; }

  std::string to_json() const;
  static DtmcPredictor from_json(std::string_view text);

 private:
  DtmcPredictor(StatePartition partition, std::vector<std::vector<double>> transitions,
                std::vector<double> bounds);

  StatePartition partition_;
  std::vector<std::vector<double>> transitions_;  // row-stochastic
  std::vector<double> bounds_;  // per-state representative INR; top state uses the training max
};

}  // namespace tailpred
