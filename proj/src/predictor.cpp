#include "tailpred/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "tailpred/errors.hpp"
#include "tailpred/math.hpp"

namespace tailpred {

namespace {

// Bulk+tail fit on one conditional sample. `pooled` supplies tail parameters
// when the sample holds too few exceedances for its own fit; the global fit
// passes nullptr and falls back to an exponential tail instead.
ConditionalMixture fit_conditional(std::vector<double> sorted, const MixtureOptions& opt,
                                   const ConditionalMixture* pooled) {
  const std::size_t n = sorted.size();
  const double u = quantile_sorted(sorted, opt.exceed_percentile);

  std::vector<double> bulk;
  std::vector<double> exceedances;
  for (double x : sorted) {
    if (x > u)
      exceedances.push_back(x - u);
    else
      bulk.push_back(x);
  }
  if (exceedances.empty()) fail(errc::insufficient_tail, "no exceedances above the threshold");

  bool tail_from_global = false;
  GpdParams params;
  if (exceedances.size() >= opt.min_tail_fit) {
    params = fit_gpd_mle(exceedances, {opt.min_tail_fit, 5.0});
  } else if (pooled != nullptr) {
    params = pooled->tail.params;
    tail_from_global = true;
  } else {
    params = fit_exponential_tail(exceedances);
  }

  const double rho = static_cast<double>(exceedances.size()) / static_cast<double>(n);
  TailModel tail{u, rho, params, exceedances.size()};
  return ConditionalMixture{KdeModel::fit(std::move(bulk)), tail, 1.0 - rho, n,
                            tail_from_global, false};
}

}  // namespace

MixturePredictor::MixturePredictor(StatePartition partition, std::vector<ConditionalMixture> models,
                                   TailModel global_tail, MixtureOptions options)
    : partition_(std::move(partition)),
      models_(std::move(models)),
      global_tail_(global_tail),
      options_(options) {}

MixturePredictor MixturePredictor::train(const InterferenceTrace& trace,
                                         const MixtureOptions& options) {
  const auto& v = trace.values;
  if (v.size() < 2) fail(errc::insufficient_data, "MixturePredictor::train: trace shorter than 2");
  if (!(options.exceed_percentile > 0.0 && options.exceed_percentile < 1.0))
    fail(errc::invalid_argument, "MixturePredictor::train: exceed_percentile outside (0, 1)");

  StatePartition partition = build_partition(v, options.num_states, options.scheme);
  const std::size_t num_states = partition.num_states();

  // Conditional samples: successors grouped by the state of their predecessor.
  std::vector<std::vector<double>> successors(num_states);
  for (std::size_t t = 0; t + 1 < v.size(); ++t)
    successors[partition.state_of(v[t])].push_back(v[t + 1]);

  std::vector<double> all_succ(v.begin() + 1, v.end());
  std::sort(all_succ.begin(), all_succ.end());
  const ConditionalMixture global = fit_conditional(std::move(all_succ), options, nullptr);

  std::vector<ConditionalMixture> models;
  models.reserve(num_states);
  for (std::size_t l = 0; l < num_states; ++l) {
    auto& succ = successors[l];
    if (succ.size() < options.min_state_samples) {
      ConditionalMixture copy = global;
      copy.from_global = true;
      models.push_back(std::move(copy));
      continue;
    }
    std::sort(succ.begin(), succ.end());
    try {
      models.push_back(fit_conditional(std::move(succ), options, &global));
    } catch (const Error&) {
      // No usable exceedance or a flat bulk in this state; pool instead.
      ConditionalMixture copy = global;
      copy.from_global = true;
      models.push_back(std::move(copy));
    }
  }

  return MixturePredictor(std::move(partition), std::move(models), global.tail, options);
}

double MixturePredictor::predict_for_state(std::size_t state, double eta) const {
  if (!(eta > 0.0 && eta < 1.0)) fail(errc::invalid_argument, "predict: eta outside (0, 1)");
  const ConditionalMixture& m = models_.at(state);
  if (eta <= m.bulk_mass) {
    // Bulk branch: invert the renormalized KDE CDF, never past the threshold.
    double level = eta / m.bulk_mass * m.bulk.cdf(m.tail.threshold);
    return std::min(m.bulk.quantile(level), m.tail.threshold);
  }
  return tail_quantile(1.0 - eta, m.tail);
}

double MixturePredictor::predict_next(double current_inr, double eta) const {
  return predict_for_state(partition_.state_of(current_inr), eta);
}

double MixturePredictor::conditional_cdf(std::size_t state, double x) const {
  const ConditionalMixture& m = models_.at(state);
  const double u = m.tail.threshold;
  if (x < u) return m.bulk_mass * m.bulk.cdf(x) / m.bulk.cdf(u);
  return 1.0 - m.tail.exceed_prob * (1.0 - gpd_cdf(x - u, m.tail.params));
}

std::string MixturePredictor::to_json() const {
  nlohmann::json doc;
  doc["format"] = "tailpred-mixture-v1";
  doc["boundaries"] = partition_.edges;
  doc["options"] = {{"num_states", options_.num_states},
                    {"exceed_percentile", options_.exceed_percentile},
                    {"min_tail_fit", options_.min_tail_fit},
                    {"min_state_samples", options_.min_state_samples},
                    {"scheme", options_.scheme == PartitionScheme::quantile ? "quantile" : "tail_refined"}};
  doc["global_tail"] = {{"threshold", global_tail_.threshold},
                        {"exceed_prob", global_tail_.exceed_prob},
                        {"scale", global_tail_.params.scale},
                        {"shape", global_tail_.params.shape},
                        {"num_exceedances", global_tail_.num_exceedances}};
  nlohmann::json states = nlohmann::json::array();
  for (const auto& m : models_) {
    states.push_back({{"threshold", m.tail.threshold},
                      {"exceed_prob", m.tail.exceed_prob},
                      {"scale", m.tail.params.scale},
                      {"shape", m.tail.params.shape},
                      {"num_exceedances", m.tail.num_exceedances},
                      {"sample_count", m.sample_count},
                      {"tail_from_global", m.tail_from_global},
                      {"from_global", m.from_global},
                      {"kernel_variance", m.bulk.kernel_variance()},
                      {"bulk_samples", m.bulk.samples()}});
  }
  doc["states"] = std::move(states);
  return doc.dump(2);
}

MixturePredictor MixturePredictor::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("MixturePredictor::from_json: ") + e.what());
  }
  try {
    if (doc.at("format").get<std::string>() != "tailpred-mixture-v1")
      fail(errc::parse_error, "MixturePredictor::from_json: unknown format tag");

    StatePartition partition;
    partition.edges = doc.at("boundaries").get<std::vector<double>>();

    MixtureOptions options;
    const auto& o = doc.at("options");
    options.num_states = o.at("num_states").get<std::size_t>();
    options.exceed_percentile = o.at("exceed_percentile").get<double>();
    options.min_tail_fit = o.at("min_tail_fit").get<std::size_t>();
    options.min_state_samples = o.at("min_state_samples").get<std::size_t>();
    options.scheme = o.at("scheme").get<std::string>() == "tail_refined"
                         ? PartitionScheme::tail_refined
                         : PartitionScheme::quantile;

    const auto& g = doc.at("global_tail");
    TailModel global_tail{g.at("threshold").get<double>(), g.at("exceed_prob").get<double>(),
                          {g.at("scale").get<double>(), g.at("shape").get<double>()},
                          g.at("num_exceedances").get<std::size_t>()};

    std::vector<ConditionalMixture> models;
    for (const auto& s : doc.at("states")) {
      TailModel tail{s.at("threshold").get<double>(), s.at("exceed_prob").get<double>(),
                     {s.at("scale").get<double>(), s.at("shape").get<double>()},
                     s.at("num_exceedances").get<std::size_t>()};
      models.push_back(ConditionalMixture{
          KdeModel(s.at("bulk_samples").get<std::vector<double>>(), s.at("kernel_variance").get<double>()),
          tail, 1.0 - tail.exceed_prob, s.at("sample_count").get<std::size_t>(),
          s.at("tail_from_global").get<bool>(), s.at("from_global").get<bool>()});
    }
    if (models.size() != partition.num_states())
      fail(errc::parse_error, "MixturePredictor::from_json: state count does not match boundaries");

    return MixturePredictor(std::move(partition), std::move(models), global_tail, options);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("MixturePredictor::from_json: ") + e.what());
  }
}

}  // namespace tailpred
