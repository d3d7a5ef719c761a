#pragma once

#include "coremed/types.hpp"

namespace coremed {

// A single ranking in the same encoding as RankingSet rows: rank of each item.
using Ranking = std::vector<std::int32_t>;

// Positional scores: items ordered by ascending weighted rank sum, ties by
// item index.
Ranking borda(const RankingSet& rs);

// Random-walk aggregation. From item i the chain moves as follows, then gets
// mixed with a uniform teleport (weight 1 - alpha):
//   variant 1: uniformly to any item ranked above i in at least one row
//   variant 2: pick a row, then uniformly among items ranked at or above i
//   variant 3: pick a row and an item j; move only if the row ranks j above i
// The transition matrix is built in expectation (no simulation), the
// stationary vector comes from power iteration and items are ordered by
// descending mass, ties by index. Throws if the iteration does not converge.
struct McOptions {
  int variant = 3;
  double alpha = 0.95;
  double tol = 1e-12;
  int max_iters = 100000;
};

Ranking mc_aggregate(const RankingSet& rs, const McOptions& opt = {});

// Scaled footrule aggregation: assign items to output positions minimizing
// sum over items and rows of |pos_out(i)/d - pos_row(i)/d|, solved exactly as
// a min-cost bipartite assignment. Cost ties resolve to the lexicographically
// smallest preference order.
Ranking footrule_aggregate(const RankingSet& rs);

// Two-group prefix fairness: every prefix of length l of the output must
// contain at least floor(l * rho[g]) items of group g, for both groups.
struct PrefixFairness {
  std::vector<std::uint8_t> group;  // per item, 0 or 1
  double rho0 = 0.0;
  double rho1 = 0.0;
};

bool fairness_satisfied(const PrefixFairness& f, const Ranking& r);
bool fairness_feasible(const PrefixFairness& f, std::size_t d);

// Exact Kendall median by enumeration of all d! preference orders (d <= 8),
// optionally restricted to fair rankings or to an explicit candidate list.
// Ties resolve to the lexicographically smallest preference order. Throws
// when the fairness spec admits no ranking at all.
struct MedianRanking {
  Ranking center;
  double cost_value = 0.0;
};

MedianRanking kendall_median_exact(const RankingSet& rs,
                                   const PrefixFairness* fair = nullptr,
                                   const RankingSet* candidates = nullptr);

// Helpers shared with tests: preference order <-> rank vector.
Ranking order_to_ranks(std::span<const std::int32_t> order);
std::vector<std::int32_t> ranks_to_order(const Ranking& ranks);

}  // namespace coremed
