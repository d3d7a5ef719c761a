#pragma once

#include <vector>

#include "coremed/types.hpp"

// Hot loops behind the metric and checker layers. The default entry points
// use OpenMP and algebraic shortcuts (Kendall costs go through a d*d
// pair-count matrix instead of per-row pair scans). Parallel work is split
// across pool rows, or across fixed 4096-row chunks whose partial sums are
// combined in chunk order, so results do not depend on the thread count.
// coremed::serial holds plain reference implementations for tests and the
// benchmark target.

namespace coremed {

struct PairwiseStats {
  double diameter = 0.0;
  double sum = 0.0;  // over unordered pairs i < j
};

// Total weighted cost of every pool row against the instance.
std::vector<double> pool_costs(Metric m, const PointSet& pool, const PointSet& inst);
std::vector<double> pool_costs(Metric m, const RankingSet& pool, const RankingSet& inst);
std::vector<double> pool_costs(Metric m, const SetFamily& pool, const SetFamily& inst);

PairwiseStats pairwise_stats(Metric m, const PointSet& inst);
PairwiseStats pairwise_stats(Metric m, const RankingSet& inst);
PairwiseStats pairwise_stats(Metric m, const SetFamily& inst);

// Weighted "i placed before j" tallies; entry [i*d + j] is the total weight
// of rows ranking i above j. Shared by the Kendall cost path and the rank
// aggregation solvers.
std::vector<double> pair_preference_counts(const RankingSet& inst);

// Summed Kendall distance of one rank vector to the whole instance, read off
// the precomputed tally matrix in O(d^2).
double kendall_cost_from_counts(const std::vector<double>& counts, std::size_t d,
                                std::span<const std::int32_t> center);

namespace serial {
std::vector<double> pool_costs(Metric m, const PointSet& pool, const PointSet& inst);
std::vector<double> pool_costs(Metric m, const RankingSet& pool, const RankingSet& inst);
std::vector<double> pool_costs(Metric m, const SetFamily& pool, const SetFamily& inst);
PairwiseStats pairwise_stats(Metric m, const PointSet& inst);
PairwiseStats pairwise_stats(Metric m, const RankingSet& inst);
PairwiseStats pairwise_stats(Metric m, const SetFamily& inst);
}  // namespace serial

}  // namespace coremed
