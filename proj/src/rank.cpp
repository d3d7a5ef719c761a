#include "coremed/rank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "coremed/kernels.hpp"

namespace coremed {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Ranking order_to_ranks(std::span<const std::int32_t> order) {
  Ranking ranks(order.size(), -1);
  for (std::size_t p = 0; p < order.size(); ++p) {
    const auto item = static_cast<std::size_t>(order[p]);
    detail::require(order[p] >= 0 && item < order.size() && ranks[item] < 0,
                    "order_to_ranks: not a permutation");
    ranks[item] = static_cast<std::int32_t>(p);
  }
  return ranks;
}

std::vector<std::int32_t> ranks_to_order(const Ranking& ranks) {
  std::vector<std::int32_t> order(ranks.size(), -1);
  for (std::size_t item = 0; item < ranks.size(); ++item) {
    const auto p = static_cast<std::size_t>(ranks[item]);
    detail::require(ranks[item] >= 0 && p < ranks.size() && order[p] < 0,
                    "ranks_to_order: not a permutation");
    order[p] = static_cast<std::int32_t>(item);
  }
  return order;
}

Ranking borda(const RankingSet& rs) {
  detail::require(rs.n > 0, "borda: empty input");
  const std::size_t d = rs.d;
  std::vector<double> score(d, 0.0);
  for (std::size_t r = 0; r < rs.n; ++r) {
    const double w = rs.weight(r);
    const auto row = rs.row(r);
    for (std::size_t i = 0; i < d; ++i) score[i] += w * static_cast<double>(row[i]);
  }
  std::vector<std::int32_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return score[static_cast<std::size_t>(a)] < score[static_cast<std::size_t>(b)];
  });
  return order_to_ranks(order);
}

Ranking mc_aggregate(const RankingSet& rs, const McOptions& opt) {
  detail::require(rs.n > 0, "mc_aggregate: empty input");
  detail::require(opt.variant >= 1 && opt.variant <= 3, "mc_aggregate: variant 1, 2 or 3");
  detail::require(opt.alpha > 0.0 && opt.alpha <= 1.0, "mc_aggregate: alpha in (0,1]");
  const std::size_t d = rs.d;
  const double W = rs.total_weight();

  std::vector<double> P(d * d, 0.0);
  if (opt.variant == 1) {
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<char> above(d, 0);
      std::size_t cnt = 0;
      for (std::size_t r = 0; r < rs.n; ++r) {
        const auto row = rs.row(r);
        for (std::size_t j = 0; j < d; ++j) {
          if (!above[j] && row[j] < row[i]) {
            above[j] = 1;
            ++cnt;
          }
        }
      }
      if (cnt == 0) {
        P[i * d + i] = 1.0;
      } else {
        for (std::size_t j = 0; j < d; ++j)
          if (above[j]) P[i * d + j] = 1.0 / static_cast<double>(cnt);
      }
    }
  } else if (opt.variant == 2) {
    for (std::size_t r = 0; r < rs.n; ++r) {
      const double w = rs.weight(r) / W;
      const auto row = rs.row(r);
      for (std::size_t i = 0; i < d; ++i) {
        const double share = w / static_cast<double>(row[i] + 1);
        for (std::size_t j = 0; j < d; ++j)
          if (row[j] <= row[i]) P[i * d + j] += share;
      }
    }
  } else {
    for (std::size_t r = 0; r < rs.n; ++r) {
      const double w = rs.weight(r) / W;
      const auto row = rs.row(r);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (row[j] < row[i]) P[i * d + j] += w / static_cast<double>(d);
    }
    for (std::size_t i = 0; i < d; ++i) {
      double off = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) off += P[i * d + j];
      P[i * d + i] = 1.0 - off;
    }
  }

  const double teleport = (1.0 - opt.alpha) / static_cast<double>(d);
  std::vector<double> pi(d, 1.0 / static_cast<double>(d)), next(d);
  bool converged = false;
  for (int it = 0; it < opt.max_iters; ++it) {
    std::fill(next.begin(), next.end(), teleport);
    for (std::size_t i = 0; i < d; ++i) {
      const double pa = opt.alpha * pi[i];
      if (pa == 0.0) continue;
      for (std::size_t j = 0; j < d; ++j) next[j] += pa * P[i * d + j];
    }
    double delta = 0.0;
    for (std::size_t j = 0; j < d; ++j) delta += std::abs(next[j] - pi[j]);
    pi.swap(next);
    if (delta <= opt.tol) {
      converged = true;
      break;
    }
  }
  detail::require(converged, "mc_aggregate: power iteration did not converge");

  std::vector<std::int32_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    return pi[static_cast<std::size_t>(a)] > pi[static_cast<std::size_t>(b)];
  });
  return order_to_ranks(order);
}

// ============================================================
// Scaled footrule assignment
// ============================================================

namespace {

// Minimum cost perfect assignment on a square matrix, potentials method.
// Returns the column picked for each row and the total cost.
std::pair<std::vector<int>, double> min_cost_assignment(const std::vector<double>& cost,
                                                        int n) {
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> match(n, -1);
  double total = 0.0;
  for (int j = 1; j <= n; ++j) {
    if (p[j]) {
      match[p[j] - 1] = j - 1;
      total += cost[(p[j] - 1) * n + (j - 1)];
    }
  }
  return {match, total};
}

}  // namespace

Ranking footrule_aggregate(const RankingSet& rs) {
  detail::require(rs.n > 0, "footrule_aggregate: empty input");
  const std::size_t d = rs.d;
  const auto dn = static_cast<int>(d);
  const double dd = static_cast<double>(d);

  // cost[item][position] with both positions scaled into [0,1).
  std::vector<double> cost(d * d, 0.0);
  for (std::size_t r = 0; r < rs.n; ++r) {
    const double w = rs.weight(r);
    const auto row = rs.row(r);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t p = 0; p < d; ++p)
        cost[i * d + p] +=
            w * std::abs(static_cast<double>(p) - static_cast<double>(row[i])) / dd;
  }
  const double opt = min_cost_assignment(cost, dn).second;

  // Fill positions front to back with the smallest item that still allows an
  // optimal completion; this pins down the lexicographically smallest
  // preference order among the optimal assignments.
  std::vector<std::int32_t> order;
  std::vector<char> taken(d, 0);
  double prefix = 0.0;
  for (std::size_t p = 0; p < d; ++p) {
    const std::size_t rem = d - p - 1;
    bool placed = false;
    for (std::size_t i = 0; i < d && !placed; ++i) {
      if (taken[i]) continue;
      double rest = 0.0;
      if (rem > 0) {
        std::vector<double> sub(rem * rem);
        std::size_t a = 0;
        for (std::size_t ii = 0; ii < d; ++ii) {
          if (taken[ii] || ii == i) continue;
          for (std::size_t pp = 0; pp < rem; ++pp)
            sub[a * rem + pp] = cost[ii * d + (p + 1 + pp)];
          ++a;
        }
        rest = min_cost_assignment(sub, static_cast<int>(rem)).second;
      }
      if (prefix + cost[i * d + p] + rest <= opt + 1e-9) {
        prefix += cost[i * d + p];
        taken[i] = 1;
        order.push_back(static_cast<std::int32_t>(i));
        placed = true;
      }
    }
    detail::require(placed, "footrule_aggregate: assignment reconstruction failed");
  }
  return order_to_ranks(order);
}

// ============================================================
// Prefix fairness
// ============================================================

namespace {

std::size_t prefix_floor(double rho, std::size_t l) {
  return static_cast<std::size_t>(std::floor(rho * static_cast<double>(l)));
}

}  // namespace

bool fairness_satisfied(const PrefixFairness& f, const Ranking& r) {
  const std::size_t d = r.size();
  detail::require(f.group.size() == d, "fairness_satisfied: group size mismatch");
  const auto order = ranks_to_order(r);
  std::size_t c0 = 0, c1 = 0;
  for (std::size_t l = 1; l <= d; ++l) {
    const auto g = f.group[static_cast<std::size_t>(order[l - 1])];
    detail::require(g <= 1, "fairness_satisfied: groups are 0 or 1");
    if (g == 0)
      ++c0;
    else
      ++c1;
    if (c0 < prefix_floor(f.rho0, l) || c1 < prefix_floor(f.rho1, l)) return false;
  }
  return true;
}

bool fairness_feasible(const PrefixFairness& f, std::size_t d) {
  detail::require(f.group.size() == d, "fairness_feasible: group size mismatch");
  std::size_t n0 = 0;
  for (auto g : f.group) {
    detail::require(g <= 1, "fairness_feasible: groups are 0 or 1");
    if (g == 0) ++n0;
  }
  const std::size_t n1 = d - n0;
  // Reachability over (prefix length, group 0 count).
  std::vector<char> reach(d + 1, 0);
  reach[0] = 1;
  for (std::size_t l = 1; l <= d; ++l) {
    std::vector<char> next(d + 1, 0);
    const std::size_t f0 = prefix_floor(f.rho0, l);
    const std::size_t f1 = prefix_floor(f.rho1, l);
    for (std::size_t c0 = 0; c0 <= l; ++c0) {
      const std::size_t c1 = l - c0;
      if (c0 > n0 || c1 > n1) continue;
      if (c0 < f0 || c1 < f1) continue;
      const bool from_zero = c0 > 0 && reach[c0 - 1];
      const bool from_one = reach[c0];
      if (from_zero || from_one) next[c0] = 1;
    }
    reach.swap(next);
  }
  return std::any_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

// ============================================================
// Exact Kendall median
// ============================================================

MedianRanking kendall_median_exact(const RankingSet& rs, const PrefixFairness* fair,
                                   const RankingSet* candidates) {
  detail::require(rs.n > 0, "kendall_median_exact: empty input");
  const std::size_t d = rs.d;
  const auto counts = pair_preference_counts(rs);

  MedianRanking best;
  best.cost_value = kInf;
  bool found = false;

  if (candidates != nullptr) {
    detail::require(candidates->d == d, "kendall_median_exact: candidate dim mismatch");
    std::vector<std::int32_t> best_order;
    for (std::size_t c = 0; c < candidates->n; ++c) {
      const auto row = candidates->row(c);
      Ranking center(row.begin(), row.end());
      if (fair != nullptr && !fairness_satisfied(*fair, center)) continue;
      const double cv = kendall_cost_from_counts(counts, d, center);
      auto order = ranks_to_order(center);
      if (!found || cv < best.cost_value ||
          (cv == best.cost_value && order < best_order)) {
        best.center = std::move(center);
        best.cost_value = cv;
        best_order = std::move(order);
        found = true;
      }
    }
    detail::require(found, "kendall_median_exact: no admissible candidate");
    return best;
  }

  detail::require(d <= 8, "kendall_median_exact: enumeration capped at 8 items");
  std::vector<std::int32_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  // next_permutation walks orders in lex order, so on ties the first minimum
  // seen is already the lexicographically smallest preference order.
  do {
    const Ranking center = order_to_ranks(order);
    if (fair != nullptr && !fairness_satisfied(*fair, center)) continue;
    const double cv = kendall_cost_from_counts(counts, d, center);
    if (!found || cv < best.cost_value) {
      best.center = center;
      best.cost_value = cv;
      found = true;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  detail::require(found, "kendall_median_exact: fairness admits no ranking");
  return best;
}

}  // namespace coremed
