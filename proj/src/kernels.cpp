#include "coremed/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "coremed/metrics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coremed {

namespace {

// Fixed chunk length for pairwise scans. Partial results are combined in
// chunk order, so sums come out bitwise identical for any thread count.
constexpr std::size_t kChunk = 256;

double row_dist(Metric m, const PointSet& a, std::size_t i, const PointSet& b,
                std::size_t j) {
  return dist(m, a, i, b, j);
}
double row_dist(Metric m, const RankingSet& a, std::size_t i, const RankingSet& b,
                std::size_t j) {
  return dist(m, a, i, b, j);
}
double row_dist(Metric m, const SetFamily& a, std::size_t i, const SetFamily& b,
                std::size_t j) {
  return dist(m, a, i, b, j);
}

template <class C>
std::vector<double> pool_costs_generic(Metric m, const C& pool, const C& inst) {
  detail::require(inst.n > 0, "pool_costs: empty instance");
  detail::require(pool.d == inst.d, "pool_costs: dimension mismatch");
  std::vector<double> out(pool.n, 0.0);
  const auto pn = static_cast<std::int64_t>(pool.n);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < pn; ++c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < inst.n; ++i) {
      acc += inst.weight(i) * row_dist(m, pool, static_cast<std::size_t>(c), inst, i);
    }
    out[static_cast<std::size_t>(c)] = acc;
  }
  return out;
}

template <class C>
std::vector<double> pool_costs_serial_generic(Metric m, const C& pool, const C& inst) {
  detail::require(inst.n > 0, "pool_costs: empty instance");
  detail::require(pool.d == inst.d, "pool_costs: dimension mismatch");
  std::vector<double> out(pool.n, 0.0);
  for (std::size_t c = 0; c < pool.n; ++c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < inst.n; ++i) acc += inst.weight(i) * row_dist(m, pool, c, inst, i);
    out[c] = acc;
  }
  return out;
}

// Pairwise scan over unordered pairs, chunked by the first index.
template <class C>
PairwiseStats pairwise_generic(Metric m, const C& inst) {
  detail::require(inst.n > 0, "pairwise_stats: empty instance");
  const std::size_t n = inst.n;
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<double> sums(nchunks, 0.0), maxs(nchunks, 0.0);
  const auto nc = static_cast<std::int64_t>(nchunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ci = 0; ci < nc; ++ci) {
    const std::size_t lo = static_cast<std::size_t>(ci) * kChunk;
    const std::size_t hi = std::min(lo + kChunk, n);
    double s = 0.0, mx = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = row_dist(m, inst, i, inst, j);
        s += d;
        if (d > mx) mx = d;
      }
    }
    sums[static_cast<std::size_t>(ci)] = s;
    maxs[static_cast<std::size_t>(ci)] = mx;
  }
  PairwiseStats st;
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    st.sum += sums[ci];
    st.diameter = std::max(st.diameter, maxs[ci]);
  }
  return st;
}

template <class C>
PairwiseStats pairwise_serial_generic(Metric m, const C& inst) {
  detail::require(inst.n > 0, "pairwise_stats: empty instance");
  PairwiseStats st;
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = i + 1; j < inst.n; ++j) {
      const double d = row_dist(m, inst, i, inst, j);
      st.sum += d;
      st.diameter = std::max(st.diameter, d);
    }
  }
  return st;
}

}  // namespace

std::vector<double> pool_costs(Metric m, const PointSet& pool, const PointSet& inst) {
  return pool_costs_generic(m, pool, inst);
}

// Kendall costs: build the weighted pair tally once, then each pool row costs
// O(d^2) instead of O(n d^2). Tallies and per-row sums do not depend on row
// order, so this matches the direct path exactly (integer-valued weights) or
// to rounding (general weights).
std::vector<double> pool_costs(Metric m, const RankingSet& pool, const RankingSet& inst) {
  if (m != Metric::KendallTau || inst.n < 8)
    return pool_costs_generic(m, pool, inst);
  const auto counts = pair_preference_counts(inst);
  std::vector<double> out(pool.n, 0.0);
  const auto pn = static_cast<std::int64_t>(pool.n);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < pn; ++c) {
    out[static_cast<std::size_t>(c)] =
        kendall_cost_from_counts(counts, inst.d, pool.row(static_cast<std::size_t>(c)));
  }
  return out;
}

std::vector<double> pool_costs(Metric m, const SetFamily& pool, const SetFamily& inst) {
  return pool_costs_generic(m, pool, inst);
}

PairwiseStats pairwise_stats(Metric m, const PointSet& inst) { return pairwise_generic(m, inst); }
PairwiseStats pairwise_stats(Metric m, const RankingSet& inst) { return pairwise_generic(m, inst); }
PairwiseStats pairwise_stats(Metric m, const SetFamily& inst) { return pairwise_generic(m, inst); }

std::vector<double> pair_preference_counts(const RankingSet& inst) {
  const std::size_t d = inst.d;
  std::vector<double> counts(d * d, 0.0);
  for (std::size_t r = 0; r < inst.n; ++r) {
    const auto row = inst.row(r);
    const double w = inst.weight(r);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (row[i] < row[j])
          counts[i * d + j] += w;
        else
          counts[j * d + i] += w;
      }
    }
  }
  return counts;
}

double kendall_cost_from_counts(const std::vector<double>& counts, std::size_t d,
                                std::span<const std::int32_t> center) {
  // A pair (i,j) the center orders i-first is discordant with every row that
  // put j first, and vice versa.
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      acc += center[i] < center[j] ? counts[j * d + i] : counts[i * d + j];
    }
  }
  return acc;
}

namespace serial {

std::vector<double> pool_costs(Metric m, const PointSet& pool, const PointSet& inst) {
  return pool_costs_serial_generic(m, pool, inst);
}
std::vector<double> pool_costs(Metric m, const RankingSet& pool, const RankingSet& inst) {
  return pool_costs_serial_generic(m, pool, inst);
}
std::vector<double> pool_costs(Metric m, const SetFamily& pool, const SetFamily& inst) {
  return pool_costs_serial_generic(m, pool, inst);
}
PairwiseStats pairwise_stats(Metric m, const PointSet& inst) {
  return pairwise_serial_generic(m, inst);
}
PairwiseStats pairwise_stats(Metric m, const RankingSet& inst) {
  return pairwise_serial_generic(m, inst);
}
PairwiseStats pairwise_stats(Metric m, const SetFamily& inst) {
  return pairwise_serial_generic(m, inst);
}

}  // namespace serial

}  // namespace coremed
