#include "tailpred/dtmc.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "tailpred/errors.hpp"

namespace tailpred {

DtmcPredictor::DtmcPredictor(StatePartition partition, std::vector<std::vector<double>> transitions,
                             std::vector<double> bounds)
    : partition_(std::move(partition)),
      transitions_(std::move(transitions)),
      bounds_(std::move(bounds)) {}

DtmcPredictor DtmcPredictor::train(const InterferenceTrace& trace, std::size_t levels) {
  const auto& v = trace.values;
  if (v.size() < 2) fail(errc::insufficient_data, "DtmcPredictor::train: trace shorter than 2");

  StatePartition partition = build_partition(v, levels);
  const std::size_t n = partition.num_states();

  std::vector<std::size_t> state(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) state[t] = partition.state_of(v[t]);

  std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> occupancy(n, 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    ++occupancy[state[t]];
    if (t + 1 < v.size()) ++counts[state[t]][state[t + 1]];
  }

  std::vector<std::vector<double>> transitions(n, std::vector<double>(n, 0.0));
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t row_total = 0;
    for (std::size_t m = 0; m < n; ++m) row_total += counts[l][m];
    if (row_total > 0) {
      for (std::size_t m = 0; m < n; ++m)
        transitions[l][m] = static_cast<double>(counts[l][m]) / static_cast<double>(row_total);
    } else {
      // Never observed as a predecessor; fall back to the marginal occupancy.
      for (std::size_t m = 0; m < n; ++m)
        transitions[l][m] = static_cast<double>(occupancy[m]) / static_cast<double>(v.size());
    }
  }

  std::vector<double> bounds(partition.edges);
  bounds.push_back(*std::max_element(v.begin(), v.end()));

  return DtmcPredictor(std::move(partition), std::move(transitions), std::move(bounds));
}

double DtmcPredictor::predict_for_state(std::size_t state, double eta) const {
  if (!(eta > 0.0 && eta < 1.0)) fail(errc::invalid_argument, "predict: eta outside (0, 1)");
  const auto& row = transitions_.at(state);
  double cum = 0.0;
  for (std::size_t m = 0; m < row.size(); ++m) {
    cum += row[m];
    if (cum >= eta) return bounds_[m];
  }
  return bounds_.back();
}

double DtmcPredictor::predict_next(double current_inr, double eta) const {
  return predict_for_state(partition_.state_of(current_inr), eta);
}

std::string DtmcPredictor::to_json() const {
  nlohmann::json doc;
  doc["format"] = "tailpred-dtmc-v1";
  doc["boundaries"] = partition_.edges;
  doc["transitions"] = transitions_;
  doc["state_upper_bounds"] = bounds_;
  return doc.dump(2);
}

DtmcPredictor DtmcPredictor::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("DtmcPredictor::from_json: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "tailpred-dtmc-v1")
      fail(errc::parse_error, "DtmcPredictor::from_json: unknown format tag");
    StatePartition partition;
    partition.edges = doc.at("boundaries").get<std::vector<double>>();
    auto transitions = doc.at("transitions").get<std::vector<std::vector<double>>>();
    auto bounds = doc.at("state_upper_bounds").get<std::vector<double>>();
    if (transitions.size() != partition.num_states() || bounds.size() != partition.num_states())
      fail(errc::parse_error, "DtmcPredictor::from_json: inconsistent dimensions");
    return DtmcPredictor(std::move(partition), std::move(transitions), std::move(bounds));
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("DtmcPredictor::from_json: ") + e.what());
  }
}

}  // namespace tailpred
