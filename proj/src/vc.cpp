#include "coremed/vc.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <vector>

namespace coremed {

bool shatters(const PointSet& pts) {
  detail::require(pts.n <= 20, "shatters: at most 20 points");
  detail::require(pts.d > 0, "shatters: empty dimension");
  if (pts.n == 0) return true;
  const std::size_t n = pts.n;
  const std::uint32_t want = 1u << n;
  std::unordered_set<std::uint32_t> seen;
  std::vector<double> col(n);
  for (std::size_t j = 0; j < pts.d && seen.size() < want; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = pts.xs[i * pts.d + j];
    std::vector<double> cuts(col);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(cuts.front() - 1.0);  // below the minimum: the empty labeling
    for (double r : cuts) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (col[i] <= r) mask |= 1u << i;
      seen.insert(mask);
    }
  }
  return seen.size() == want;
}

std::size_t vcdim_bruteforce(const PointSet& candidates) {
  detail::require(candidates.n <= 12, "vcdim_bruteforce: at most 12 candidates");
  const std::size_t n = candidates.n;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k <= best) continue;
    PointSet sub = PointSet::zeros(k, candidates.d);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        std::copy(candidates.row(i).begin(), candidates.row(i).end(),
                  sub.row(r++).begin());
      }
    }
    if (shatters(sub)) best = k;
  }
  return best;
}

PointSet shattering_construction(std::size_t d) {
  detail::require(d >= 1 && (d & (d - 1)) == 0,
                  "shattering_construction: d must be a power of two");
  std::size_t m = 0;
  while ((1ULL << m) < d) ++m;
  PointSet pts = PointSet::zeros(m, d);
  for (std::size_t v = 0; v < d; ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t bit = (v >> (m - 1 - i)) & 1;
      pts.xs[i * d + v] = 1.0 - static_cast<double>(bit);
    }
  }
  return pts;
}

}  // namespace coremed
