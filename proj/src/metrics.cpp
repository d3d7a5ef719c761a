#include "coremed/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "coremed/kernels.hpp"
#include "coremed/rank.hpp"

namespace coremed {

double dist(Metric m, std::span<const double> a, std::span<const double> b) {
  detail::require(a.size() == b.size(), "dist: dimension mismatch");
  double acc = 0.0;
  switch (m) {
    case Metric::L1:
      for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case Metric::L2:
      for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
      }
      return std::sqrt(acc);
    case Metric::Hamming:
      for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] != b[i] ? 1.0 : 0.0;
      return acc;
    default:
      throw std::invalid_argument("dist: metric needs a point container");
  }
}

double kendall_dist(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  detail::require(a.size() == b.size(), "kendall_dist: dimension mismatch");
  // Direct O(d^2) discordant pair count.
  std::size_t disc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const bool ai = a[i] < a[j];
      const bool bi = b[i] < b[j];
      if (ai != bi) ++disc;
    }
  }
  return static_cast<double>(disc);
}

double jaccard_dist(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  detail::require(a.size() == b.size(), "jaccard_dist: word count mismatch");
  std::uint64_t inter = 0, uni = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    inter += std::popcount(a[w] & b[w]);
    uni += std::popcount(a[w] | b[w]);
  }
  if (uni == 0) return 0.0;  // two empty sets
  return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

double dist(Metric m, const PointSet& a, std::size_t i, const PointSet& b, std::size_t j) {
  return dist(m, a.row(i), b.row(j));
}

double dist(Metric m, const RankingSet& a, std::size_t i, const RankingSet& b,
            std::size_t j) {
  detail::require(m == Metric::KendallTau, "dist: rankings carry the Kendall metric");
  return kendall_dist(a.row(i), b.row(j));
}

double dist(Metric m, const SetFamily& a, std::size_t i, const SetFamily& b,
            std::size_t j) {
  detail::require(m == Metric::Jaccard, "dist: set families carry the Jaccard metric");
  return jaccard_dist(a.row(i), b.row(j));
}

namespace {

template <class C>
double cost_one(Metric m, const C& centers, std::size_t c, const C& inst) {
  detail::require(inst.n > 0, "cost: empty instance");
  detail::require(c < centers.n, "cost: center index out of range");
  double acc = 0.0;
  for (std::size_t i = 0; i < inst.n; ++i) acc += inst.weight(i) * dist(m, centers, c, inst, i);
  return acc;
}

}  // namespace

double cost(Metric m, const PointSet& centers, std::size_t c, const PointSet& inst) {
  return cost_one(m, centers, c, inst);
}
double cost(Metric m, const RankingSet& centers, std::size_t c, const RankingSet& inst) {
  return cost_one(m, centers, c, inst);
}
double cost(Metric m, const SetFamily& centers, std::size_t c, const SetFamily& inst) {
  return cost_one(m, centers, c, inst);
}

std::vector<double> l1_median(const PointSet& inst) {
  detail::require(inst.n > 0, "l1_median: empty instance");
  const double want = inst.total_weight() / 2.0;
  std::vector<double> med(inst.d, 0.0);
  std::vector<std::pair<double, double>> col(inst.n);
  for (std::size_t j = 0; j < inst.d; ++j) {
    for (std::size_t i = 0; i < inst.n; ++i) col[i] = {inst.xs[i * inst.d + j], inst.weight(i)};
    std::sort(col.begin(), col.end());
    double cum = 0.0;
    for (const auto& [v, w] : col) {
      cum += w;
      if (cum >= want) {  // lower median: first value reaching half the weight
        med[j] = v;
        break;
      }
    }
  }
  return med;
}

std::vector<double> hamming_median(const PointSet& inst) {
  detail::require(inst.n > 0, "hamming_median: empty instance");
  std::vector<double> med(inst.d, 0.0);
  std::map<double, double> tally;
  for (std::size_t j = 0; j < inst.d; ++j) {
    tally.clear();
    for (std::size_t i = 0; i < inst.n; ++i) tally[inst.xs[i * inst.d + j]] += inst.weight(i);
    double best_w = -1.0, best_v = 0.0;
    for (const auto& [v, w] : tally) {
      if (w > best_w) {  // map order makes ties go to the smallest value
        best_w = w;
        best_v = v;
      }
    }
    med[j] = best_v;
  }
  return med;
}

namespace {

PointSet one_row(std::vector<double> xs) {
  PointSet p;
  p.n = 1;
  p.d = xs.size();
  p.xs = std::move(xs);
  return p;
}

template <class C>
std::pair<C, double> best_candidate(Metric m, const C& inst, const C& candidates) {
  detail::require(candidates.n > 0, "exact_median: empty candidate list");
  const auto costs = pool_costs(m, candidates, inst);
  std::size_t best = 0;
  for (std::size_t i = 1; i < costs.size(); ++i)
    if (costs[i] < costs[best]) best = i;
  Coreset pick;
  pick.indices = {best};
  pick.weights = {1.0};
  C center = materialize(candidates, pick);
  center.weights.clear();
  return {std::move(center), costs[best]};
}

}  // namespace

std::pair<PointSet, double> exact_median(Metric m, const PointSet& inst,
                                         const PointSet* candidates) {
  switch (m) {
    case Metric::L1: {
      PointSet c = one_row(l1_median(inst));
      const double v = cost(m, c, 0, inst);
      return {std::move(c), v};
    }
    case Metric::Hamming: {
      PointSet c = one_row(hamming_median(inst));
      const double v = cost(m, c, 0, inst);
      return {std::move(c), v};
    }
    case Metric::L2:
      detail::require(candidates != nullptr,
                      "exact_median: L2 is candidate-restricted, supply candidates");
      return best_candidate(m, inst, *candidates);
    default:
      throw std::invalid_argument("exact_median: metric needs another container");
  }
}

std::pair<RankingSet, double> exact_median(Metric m, const RankingSet& inst,
                                           const RankingSet* candidates) {
  detail::require(m == Metric::KendallTau, "exact_median: rankings carry Kendall");
  if (candidates != nullptr && inst.d > 8) return best_candidate(m, inst, *candidates);
  detail::require(inst.d <= 8, "exact_median: d! enumeration capped at d = 8");
  const auto med = kendall_median_exact(inst);
  RankingSet c;
  c.n = 1;
  c.d = inst.d;
  c.ranks.assign(med.center.begin(), med.center.end());
  return {std::move(c), med.cost_value};
}

std::pair<SetFamily, double> exact_median(Metric m, const SetFamily& inst,
                                          const SetFamily* candidates) {
  detail::require(m == Metric::Jaccard, "exact_median: set families carry Jaccard");
  if (candidates != nullptr && inst.d > 16) return best_candidate(m, inst, *candidates);
  detail::require(inst.d <= 16, "exact_median: 2^d enumeration capped at d = 16");
  detail::require(inst.n > 0, "exact_median: empty instance");
  const std::uint64_t lim = 1ULL << inst.d;
  double best_cost = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  SetFamily probe = SetFamily::empty(1, inst.d);
  for (std::uint64_t mask = 0; mask < lim; ++mask) {
    probe.bits[0] = mask;
    const double v = cost(m, probe, 0, inst);
    if (v < best_cost) {  // strict: ties stay with the smallest mask
      best_cost = v;
      best_mask = mask;
    }
  }
  probe.bits[0] = best_mask;
  return {std::move(probe), best_cost};
}

namespace {

template <class C>
InstanceStats stats_generic(Metric m, const C& inst) {
  const PairwiseStats pw = pairwise_stats(m, inst);
  InstanceStats st;
  st.diameter = pw.diameter;
  // All n^2 ordered pairs: doubled unordered sum, self pairs add zero.
  const double n = static_cast<double>(inst.n);
  st.avg_pairwise = 2.0 * pw.sum / (n * n);
  st.dispersion_c = st.avg_pairwise > 0.0 ? st.diameter / st.avg_pairwise : 1.0;
  return st;
}

}  // namespace

InstanceStats instance_stats(Metric m, const PointSet& inst) { return stats_generic(m, inst); }
InstanceStats instance_stats(Metric m, const RankingSet& inst) { return stats_generic(m, inst); }
InstanceStats instance_stats(Metric m, const SetFamily& inst) { return stats_generic(m, inst); }

}  // namespace coremed
