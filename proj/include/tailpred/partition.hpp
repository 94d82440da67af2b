#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tailpred {

// Quantile-based discretization of the nonnegative interference axis. State s
// covers [edge[s-1], edge[s]) with implicit end sentinels 0 and +infinity, so
// the state lookup is total on [0, inf).
struct StatePartition {
  std::vector<double> edges;  // interior boundaries, strictly increasing, all > 0

  std::size_t num_states() const { return edges.size() + 1; }

  // Index of the half-open cell containing `inr`; values on an edge belong to
  // the cell above it.
  std::size_t state_of(double inr) const;
};

enum class PartitionScheme {
  quantile,      // L equiprobable bins
  tail_refined,  // equiprobable bulk bins plus dedicated [q95, q99) and [q99, inf) states
};

// Boundaries at the j/L empirical quantiles of the samples. Requires at least
// L distinct values; boundary collisions caused by repeated values (atoms)
// are collapsed, so the result may hold fewer than L states.
StatePartition build_partition(std::span<const double> samples, std::size_t levels,
                               PartitionScheme scheme = PartitionScheme::quantile);

}  // namespace tailpred
