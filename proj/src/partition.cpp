#include "tailpred/partition.hpp"

#include <algorithm>
#include <string>

#include "tailpred/errors.hpp"
#include "tailpred/math.hpp"

namespace tailpred {

std::size_t StatePartition::state_of(double inr) const {
  if (!(inr >= 0.0)) fail(errc::invalid_argument, "state_of: interference must be nonnegative");
  // First edge strictly greater than inr == index of the containing cell.
  return static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), inr) - edges.begin());
}

StatePartition build_partition(std::span<const double> samples, std::size_t levels,
                               PartitionScheme scheme) {
  if (levels < 1) fail(errc::invalid_argument, "build_partition: levels must be >= 1");
  if (samples.size() < levels)
    fail(errc::degenerate_partition, "build_partition: fewer samples than requested levels");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t distinct =
      static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  if (distinct < levels)
    fail(errc::degenerate_partition,
         "build_partition: only " + std::to_string(distinct) + " distinct values for " +
             std::to_string(levels) + " levels");
  // Restore the full sorted sample (unique() shuffled the tail).
  sorted.assign(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> levels_q;
  if (scheme == PartitionScheme::tail_refined && levels >= 4) {
    // Equiprobable bins on [0, 0.95), then the 95-99 and 99+ tail states.
    const std::size_t bulk_bins = levels - 2;
    for (std::size_t j = 1; j < bulk_bins; ++j)
      levels_q.push_back(0.95 * static_cast<double>(j) / static_cast<double>(bulk_bins));
    levels_q.push_back(0.95);
    levels_q.push_back(0.99);
  } else {
    for (std::size_t j = 1; j < levels; ++j)
      levels_q.push_back(static_cast<double>(j) / static_cast<double>(levels));
  }

  StatePartition partition;
  for (double q : levels_q) {
    double edge = quantile_sorted(sorted, q);
    // Atoms in the sample can collapse neighbouring quantiles; keep the edge
    // list strictly increasing and above the zero sentinel.
    if (edge > 0.0 && (partition.edges.empty() || edge > partition.edges.back()))
      partition.edges.push_back(edge);
  }
  return partition;
}

}  // namespace tailpred
