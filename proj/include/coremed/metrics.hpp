#pragma once

#include <utility>

#include "coremed/types.hpp"

namespace coremed {

// Point-to-point distances. Hamming counts coordinates that differ exactly,
// whatever the values; Kendall tau counts discordant item pairs; Jaccard is
// 1 - |A&B|/|A|B| with two empty sets at distance 0.
double dist(Metric m, std::span<const double> a, std::span<const double> b);
double kendall_dist(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
double jaccard_dist(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

double dist(Metric m, const PointSet& a, std::size_t i, const PointSet& b, std::size_t j);
double dist(Metric m, const RankingSet& a, std::size_t i, const RankingSet& b, std::size_t j);
double dist(Metric m, const SetFamily& a, std::size_t i, const SetFamily& b, std::size_t j);

// Weighted 1-median cost of one row of `centers` against the whole instance,
// and the same normalized by total weight.
double cost(Metric m, const PointSet& centers, std::size_t c, const PointSet& inst);
double cost(Metric m, const RankingSet& centers, std::size_t c, const RankingSet& inst);
double cost(Metric m, const SetFamily& centers, std::size_t c, const SetFamily& inst);

template <class C>
double avgcost(Metric m, const C& centers, std::size_t c, const C& inst) {
  return cost(m, centers, c, inst) / inst.total_weight();
}

// Coordinate-wise weighted lower median (the smallest value whose cumulative
// weight reaches half the total). Exact 1-median under L1.
std::vector<double> l1_median(const PointSet& inst);

// Coordinate-wise weighted mode, ties to the smallest value. Exact 1-median
// under Hamming.
std::vector<double> hamming_median(const PointSet& inst);

// Exact 1-median as a single-row instance plus its cost. L1 and Hamming have
// closed forms; L2 is candidate-restricted (throws without candidates);
// Kendall tau enumerates all d! rankings for d <= 8 and Jaccard all 2^d
// subsets for d <= 16, with a candidate list taking over beyond that.
std::pair<PointSet, double> exact_median(Metric m, const PointSet& inst,
                                         const PointSet* candidates = nullptr);
std::pair<RankingSet, double> exact_median(Metric m, const RankingSet& inst,
                                           const RankingSet* candidates = nullptr);
std::pair<SetFamily, double> exact_median(Metric m, const SetFamily& inst,
                                          const SetFamily* candidates = nullptr);

// Exact diameter and average pairwise distance (all n^2 ordered pairs, self
// pairs included; weights are ignored). O(n^2) distance evaluations.
InstanceStats instance_stats(Metric m, const PointSet& inst);
InstanceStats instance_stats(Metric m, const RankingSet& inst);
InstanceStats instance_stats(Metric m, const SetFamily& inst);

}  // namespace coremed
