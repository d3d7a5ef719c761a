#include "coremed/coreset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "coremed/kernels.hpp"
#include "coremed/rank.hpp"
#include "coremed/rng.hpp"

namespace coremed {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

// ============================================================
// Sample size formulas
// ============================================================

double uniform_sample_size_raw(double eps, std::size_t d, double delta, double K) {
  detail::require(eps > 0.0, "sample size: eps must be positive");
  detail::require(delta > 0.0 && delta < 1.0, "sample size: delta in (0,1)");
  detail::require(d > 0, "sample size: d must be positive");
  return K / (eps * eps) * std::log(2.0 * static_cast<double>(d) / delta);
}

std::size_t uniform_sample_size(double eps, std::size_t d, double delta, double K) {
  return static_cast<std::size_t>(std::ceil(uniform_sample_size_raw(eps, d, delta, K)));
}

std::size_t finite_space_sample_size(double eps, double delta, std::size_t space_size) {
  detail::require(eps > 0.0, "sample size: eps must be positive");
  detail::require(delta > 0.0 && delta < 1.0, "sample size: delta in (0,1)");
  detail::require(space_size > 0, "sample size: space must be nonempty");
  const double v = 64.0 / (eps * eps) *
                   (2.0 * std::log(static_cast<double>(space_size)) + std::log(1.0 / delta));
  return static_cast<std::size_t>(std::ceil(v));
}

std::size_t dispersed_sample_size(double eps, double C, std::size_t d, double K) {
  detail::require(eps > 0.0, "sample size: eps must be positive");
  detail::require(C >= 1.0, "sample size: dispersion ratio is at least 1");
  detail::require(d > 0, "sample size: d must be positive");
  const double v = K * C * C / (eps * eps) * std::log(2.0 * static_cast<double>(d));
  return static_cast<std::size_t>(std::ceil(v));
}

// ============================================================
// Sampling
// ============================================================

namespace {

// Index draw proportional to row weight; plain uniform for unit weights.
struct RowSampler {
  std::vector<double> cum;
  std::size_t n;
  double total;

  template <class C>
  explicit RowSampler(const C& inst) : n(inst.n), total(inst.total_weight()) {
    if (!inst.weights.empty()) {
      cum.resize(n);
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        detail::require(inst.weights[i] > 0.0, "sample: weights must be positive");
        acc += inst.weights[i];
        cum[i] = acc;
      }
    }
  }

  std::size_t draw(Rng& rng) const {
    if (cum.empty()) return rng.index(n);
    const double u = rng.uniform01() * cum.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    return std::min(static_cast<std::size_t>(it - cum.begin()), n - 1);
  }
};

template <class C>
Coreset uniform_sample_impl(const C& inst, std::size_t m, std::uint64_t seed) {
  detail::require(inst.n > 0, "uniform_sample: empty instance");
  detail::require(m > 0, "uniform_sample: m must be positive");
  RowSampler rows(inst);
  Rng rng(seed);
  Coreset cs;
  cs.method = "uniform";
  cs.seed = seed;
  cs.indices.reserve(m);
  const double w = rows.total / static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k) cs.indices.push_back(rows.draw(rng));
  cs.weights.assign(m, w);
  return cs;
}

}  // namespace

Coreset uniform_sample(const PointSet& inst, std::size_t m, std::uint64_t seed) {
  return uniform_sample_impl(inst, m, seed);
}
Coreset uniform_sample(const RankingSet& inst, std::size_t m, std::uint64_t seed) {
  return uniform_sample_impl(inst, m, seed);
}
Coreset uniform_sample(const SetFamily& inst, std::size_t m, std::uint64_t seed) {
  return uniform_sample_impl(inst, m, seed);
}

namespace {

Coreset sensitivity_round(Metric metric, const PointSet& inst, std::size_t m, Rng& rng) {
  const std::size_t n = inst.n;
  const double W = inst.total_weight();
  PointSet med;
  med.n = 1;
  med.d = inst.d;
  med.xs = l1_median(inst);

  std::vector<double> q(n);
  double total_cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = dist(metric, med.row(0), inst.row(i));
    total_cost += inst.weight(i) * q[i];
  }
  if (total_cost > 0.0) {
    // q(p) = (w/W + w d(p)/cost) / 2; the normalizer 2 is exact by design.
    for (std::size_t i = 0; i < n; ++i)
      q[i] = 0.5 * (inst.weight(i) / W + inst.weight(i) * q[i] / total_cost);
  } else {
    // Every point sits on the median: plain weight-proportional draw.
    for (std::size_t i = 0; i < n; ++i) q[i] = inst.weight(i) / W;
  }

  std::vector<double> cum(n);
  std::partial_sum(q.begin(), q.end(), cum.begin());

  Coreset cs;
  cs.seed = 0;
  cs.indices.reserve(m);
  cs.weights.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double u = rng.uniform01() * cum.back();
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const auto i = std::min(static_cast<std::size_t>(it - cum.begin()), n - 1);
    cs.indices.push_back(i);
    cs.weights.push_back(inst.weight(i) / (static_cast<double>(m) * q[i]));
  }
  return cs;
}

}  // namespace

Coreset sensitivity_sample(Metric metric, const PointSet& inst, std::size_t size,
                           std::uint64_t seed, int iterations) {
  detail::require(inst.n > 0, "sensitivity_sample: empty instance");
  detail::require(size > 0, "sensitivity_sample: size must be positive");
  detail::require(iterations == 1 || iterations == 2,
                  "sensitivity_sample: iterations is 1 or 2");
  detail::require(metric == Metric::L1 || metric == Metric::L2,
                  "sensitivity_sample: point metrics only");
  Rng rng(seed);
  if (iterations == 1) {
    Coreset cs = sensitivity_round(metric, inst, size, rng);
    cs.method = "sensitivity1";
    cs.seed = seed;
    return cs;
  }
  // Two rounds: oversample by a log factor, then rerun on the weighted round.
  const double lg = std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(inst.n, 2))));
  const std::size_t m1 = std::min(inst.n, size * static_cast<std::size_t>(lg));
  Coreset first = sensitivity_round(metric, inst, std::max(m1, size), rng);
  PointSet mid = materialize(inst, first);
  Coreset second = sensitivity_round(metric, mid, size, rng);
  Coreset cs;
  cs.method = "sensitivity2";
  cs.seed = seed;
  cs.indices.reserve(size);
  for (std::size_t idx : second.indices) cs.indices.push_back(first.indices[idx]);
  cs.weights = std::move(second.weights);
  return cs;
}

// ============================================================
// Center pools
// ============================================================

namespace {

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  k = std::min(k, n);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.index(n - i)]);
  idx.resize(k);
  return idx;
}

// Robust per-coordinate spread: IQR-based, with range/4 then 1 as fallbacks.
std::vector<double> coordinate_spread(const PointSet& inst) {
  std::vector<double> spread(inst.d, 1.0);
  std::vector<double> col(inst.n);
  for (std::size_t j = 0; j < inst.d; ++j) {
    for (std::size_t i = 0; i < inst.n; ++i) col[i] = inst.xs[i * inst.d + j];
    std::sort(col.begin(), col.end());
    const double q25 = col[inst.n / 4];
    const double q75 = col[(3 * inst.n) / 4];
    double s = (q75 - q25) / 1.349;
    if (s <= 0.0) s = (col.back() - col.front()) / 4.0;
    if (s <= 0.0) s = 1.0;
    spread[j] = s;
  }
  return spread;
}

template <class C>
C take_rows(const C& parent, const std::vector<std::size_t>& idx) {
  Coreset cs;
  cs.indices = idx;
  cs.weights.assign(idx.size(), 1.0);
  C out = materialize(parent, cs);
  out.weights.clear();
  return out;
}

}  // namespace

PointSet make_pool(Metric m, const PointSet& inst, const PoolSpec& spec) {
  detail::require(inst.n > 0, "make_pool: empty instance");
  detail::require(spec.count > 0, "make_pool: count must be positive");
  Rng rng(spec.seed);
  switch (spec.source) {
    case PoolSource::DataRows:
      return take_rows(inst, sample_without_replacement(inst.n, spec.count, rng));
    case PoolSource::PerturbedMedian: {
      PointSet pool = PointSet::zeros(spec.count, inst.d);
      const std::vector<double> med =
          m == Metric::Hamming ? hamming_median(inst) : l1_median(inst);
      std::copy(med.begin(), med.end(), pool.row(0).begin());
      const auto spread = coordinate_spread(inst);
      for (std::size_t c = 1; c < spec.count; ++c) {
        auto row = pool.row(c);
        for (std::size_t j = 0; j < inst.d; ++j)
          row[j] = med[j] + spec.spread * spread[j] * rng.normal();
      }
      return pool;
    }
    case PoolSource::RandomBox: {
      std::vector<double> lo(inst.d, kInf), hi(inst.d, -kInf);
      for (std::size_t i = 0; i < inst.n; ++i) {
        for (std::size_t j = 0; j < inst.d; ++j) {
          lo[j] = std::min(lo[j], inst.xs[i * inst.d + j]);
          hi[j] = std::max(hi[j], inst.xs[i * inst.d + j]);
        }
      }
      PointSet pool = PointSet::zeros(spec.count, inst.d);
      for (std::size_t c = 0; c < spec.count; ++c) {
        auto row = pool.row(c);
        for (std::size_t j = 0; j < inst.d; ++j) row[j] = rng.uniform(lo[j], hi[j]);
      }
      return pool;
    }
    case PoolSource::Grid: {
      detail::require(inst.d <= 2, "make_pool: grids only for d <= 2");
      std::vector<double> lo(inst.d, kInf), hi(inst.d, -kInf);
      for (std::size_t i = 0; i < inst.n; ++i) {
        for (std::size_t j = 0; j < inst.d; ++j) {
          lo[j] = std::min(lo[j], inst.xs[i * inst.d + j]);
          hi[j] = std::max(hi[j], inst.xs[i * inst.d + j]);
        }
      }
      auto line = [](double a, double b, std::size_t g, std::size_t t) {
        if (g == 1) return (a + b) / 2.0;
        return a + (b - a) * static_cast<double>(t) / static_cast<double>(g - 1);
      };
      if (inst.d == 1) {
        PointSet pool = PointSet::zeros(spec.count, 1);
        for (std::size_t t = 0; t < spec.count; ++t)
          pool.xs[t] = line(lo[0], hi[0], spec.count, t);
        return pool;
      }
      const auto g = static_cast<std::size_t>(
          std::max(1.0, std::floor(std::sqrt(static_cast<double>(spec.count)))));
      PointSet pool = PointSet::zeros(g * g, 2);
      for (std::size_t a = 0; a < g; ++a) {
        for (std::size_t b = 0; b < g; ++b) {
          auto row = pool.row(a * g + b);
          row[0] = line(lo[0], hi[0], g, a);
          row[1] = line(lo[1], hi[1], g, b);
        }
      }
      return pool;
    }
  }
  throw std::invalid_argument("make_pool: bad source");
}

RankingSet make_pool(Metric m, const RankingSet& inst, const PoolSpec& spec) {
  detail::require(m == Metric::KendallTau, "make_pool: rankings carry Kendall");
  detail::require(inst.n > 0, "make_pool: empty instance");
  detail::require(spec.count > 0, "make_pool: count must be positive");
  Rng rng(spec.seed);
  const std::size_t d = inst.d;
  auto random_perm = [&] {
    std::vector<std::int32_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i + 1 < d; ++i)
      std::swap(order[i], order[i + rng.index(d - i)]);
    return order_to_ranks(order);
  };
  switch (spec.source) {
    case PoolSource::DataRows:
      return take_rows(inst, sample_without_replacement(inst.n, spec.count, rng));
    case PoolSource::PerturbedMedian: {
      RankingSet pool;
      pool.n = spec.count;
      pool.d = d;
      pool.ranks.resize(spec.count * d);
      Ranking consensus = d <= 8 ? kendall_median_exact(inst).center : borda(inst);
      std::copy(consensus.begin(), consensus.end(), pool.row(0).begin());
      for (std::size_t c = 1; c < spec.count; ++c) {
        auto order = ranks_to_order(consensus);
        const std::size_t swaps = 1 + rng.index(d);
        for (std::size_t s = 0; s < swaps; ++s) {
          const std::size_t p = rng.index(d - 1);
          std::swap(order[p], order[p + 1]);
        }
        const Ranking r = order_to_ranks(order);
        std::copy(r.begin(), r.end(), pool.row(c).begin());
      }
      return pool;
    }
    case PoolSource::RandomBox: {
      RankingSet pool;
      pool.n = spec.count;
      pool.d = d;
      pool.ranks.resize(spec.count * d);
      for (std::size_t c = 0; c < spec.count; ++c) {
        const Ranking r = random_perm();
        std::copy(r.begin(), r.end(), pool.row(c).begin());
      }
      return pool;
    }
    case PoolSource::Grid:
      throw std::invalid_argument("make_pool: no ranking grids");
  }
  throw std::invalid_argument("make_pool: bad source");
}

SetFamily make_pool(Metric m, const SetFamily& inst, const PoolSpec& spec) {
  detail::require(m == Metric::Jaccard, "make_pool: set families carry Jaccard");
  detail::require(inst.n > 0, "make_pool: empty instance");
  detail::require(spec.count > 0, "make_pool: count must be positive");
  Rng rng(spec.seed);
  const std::size_t d = inst.d;
  switch (spec.source) {
    case PoolSource::DataRows:
      return take_rows(inst, sample_without_replacement(inst.n, spec.count, rng));
    case PoolSource::PerturbedMedian: {
      SetFamily pool = SetFamily::empty(spec.count, d);
      if (d <= 16) {
        const auto [center, c_cost] = exact_median(m, inst);
        (void)c_cost;
        std::copy(center.row(0).begin(), center.row(0).end(), pool.row(0).begin());
      } else {
        // Majority bits as a cheap consensus seed beyond enumeration range.
        for (std::size_t e = 0; e < d; ++e) {
          double on = 0.0;
          for (std::size_t i = 0; i < inst.n; ++i)
            if (inst.test(i, e)) on += 1.0;
          if (2.0 * on > static_cast<double>(inst.n)) pool.set(0, e);
        }
      }
      for (std::size_t c = 1; c < spec.count; ++c) {
        std::copy(pool.row(0).begin(), pool.row(0).end(), pool.row(c).begin());
        const std::size_t flips = 1 + rng.index(std::max<std::size_t>(1, d / 4));
        for (std::size_t f = 0; f < flips; ++f) {
          const std::size_t e = rng.index(d);
          pool.bits[c * pool.words + e / 64] ^= 1ULL << (e % 64);
        }
      }
      return pool;
    }
    case PoolSource::RandomBox: {
      SetFamily pool = SetFamily::empty(spec.count, d);
      for (std::size_t c = 0; c < spec.count; ++c)
        for (std::size_t e = 0; e < d; ++e)
          if (rng.bernoulli(0.5)) pool.set(c, e);
      return pool;
    }
    case PoolSource::Grid:
      throw std::invalid_argument("make_pool: no set grids");
  }
  throw std::invalid_argument("make_pool: bad source");
}

// ============================================================
// Threshold discrepancy
// ============================================================

double threshold_discrepancy(const PointSet& parent, const PointSet& sub) {
  detail::require(parent.n > 0 && sub.n > 0, "threshold_discrepancy: empty input");
  detail::require(parent.d == sub.d, "threshold_discrepancy: dimension mismatch");
  const double np = static_cast<double>(parent.n);
  const double nq = static_cast<double>(sub.n);
  double worst = 0.0;
  std::vector<double> p(parent.n), q(sub.n);
  for (std::size_t j = 0; j < parent.d; ++j) {
    for (std::size_t i = 0; i < parent.n; ++i) p[i] = parent.xs[i * parent.d + j];
    for (std::size_t i = 0; i < sub.n; ++i) q[i] = sub.xs[i * sub.d + j];
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    // Both empirical CDFs are right-continuous steps; the sup over thresholds
    // is attained just after a data value, so walking the merged distinct
    // values is exact.
    std::size_t ip = 0, iq = 0;
    while (ip < p.size() || iq < q.size()) {
      double v;
      if (iq >= q.size() || (ip < p.size() && p[ip] <= q[iq]))
        v = p[ip];
      else
        v = q[iq];
      while (ip < p.size() && p[ip] <= v) ++ip;
      while (iq < q.size() && q[iq] <= v) ++iq;
      const double dev =
          std::abs(static_cast<double>(ip) / np - static_cast<double>(iq) / nq);
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

// ============================================================
// Checks
// ============================================================

namespace {

template <class C>
std::vector<double> pool_avg(Metric m, const C& pool, const C& inst) {
  std::vector<double> v = pool_costs(m, pool, inst);
  const double w = inst.total_weight();
  for (double& x : v) x /= w;
  return v;
}

// Deviation ratio with the zero-cost convention: a zero reference admits only
// zero, anything else is an infinite violation.
double ratio_minus_one(double num, double ref) {
  if (ref == 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / ref - 1.0;
}

template <class C>
CheckReport strong_impl(Metric m, const C& P, const C& Q, const C& pool, double eps) {
  detail::require(pool.n > 0, "check_strong: empty pool");
  const auto ap = pool_avg(m, pool, P);
  const auto aq = pool_avg(m, pool, Q);
  CheckReport rep;
  rep.property = "strong";
  rep.eps = eps;
  rep.eta = kNaN;
  for (std::size_t c = 0; c < pool.n; ++c) {
    double dev;
    if (ap[c] == 0.0)
      dev = aq[c] == 0.0 ? 0.0 : kInf;
    else
      dev = std::abs(aq[c] - ap[c]) / ap[c];
    if (dev > rep.measured) {
      rep.measured = dev;
      rep.witness_a = static_cast<std::int64_t>(c);
    }
  }
  rep.passed = rep.measured <= eps;
  return rep;
}

template <class C>
CheckReport stable_impl(Metric m, const C& P, const C& Q, const C& pool, double eps,
                        double eta) {
  detail::require(pool.n > 0, "check_stable: empty pool");
  const auto ap = pool_avg(m, pool, P);
  const auto aq = pool_avg(m, pool, Q);
  CheckReport rep;
  rep.property = "stable";
  rep.eps = eps;
  rep.eta = eta;
  for (std::size_t a = 0; a < pool.n; ++a) {
    for (std::size_t b = 0; b < pool.n; ++b) {
      if (a == b) continue;
      if (aq[a] > (1.0 + eps) * aq[b]) continue;  // premise not fired
      const double dev = ratio_minus_one(ap[a], ap[b]);
      if (dev > rep.measured) {
        rep.measured = dev;
        rep.witness_a = static_cast<std::int64_t>(a);
        rep.witness_b = static_cast<std::int64_t>(b);
      }
    }
  }
  rep.passed = rep.measured <= eta;
  return rep;
}

template <class C>
std::pair<C, double> reference_optimum(Metric m, const C& inst, const C& pool) {
  // Exact where a closed form or enumeration applies, else best pool row.
  return exact_median(m, inst, &pool);
}

template <class C>
CheckReport weak_impl(Metric m, const C& P, const C& Q, const C& pool, double eps,
                      double eta) {
  detail::require(pool.n > 0, "check_weak: empty pool");
  const auto ap = pool_avg(m, pool, P);
  const auto aq = pool_avg(m, pool, Q);
  const double wq = Q.total_weight();
  const double wp = P.total_weight();

  const auto [med_q, med_q_cost] = reference_optimum(m, Q, pool);
  double opt_q = med_q_cost / wq;
  for (double v : aq) opt_q = std::min(opt_q, v);

  const auto [med_p, med_p_cost] = reference_optimum(m, P, pool);
  const double opt_p = med_p_cost / wp;

  CheckReport rep;
  rep.property = "weak";
  rep.eps = eps;
  rep.eta = eta;
  for (std::size_t c = 0; c < pool.n; ++c) {
    if (aq[c] > (1.0 + eps) * opt_q) continue;
    const double dev = ratio_minus_one(ap[c], opt_p);
    if (dev > rep.measured) {
      rep.measured = dev;
      rep.witness_a = static_cast<std::int64_t>(c);
    }
  }
  rep.passed = rep.measured <= eta;
  return rep;
}

template <class C>
struct DriftData {
  CheckReport report;
  double mu_avg_p = 0.0;
  double mu_avg_q = 0.0;
};

template <class C>
DriftData<C> drift_impl(Metric m, const C& P, const C& Q, const C& pool, const C* mu,
                        std::optional<double> eps) {
  detail::require(pool.n > 0, "centered_drift: empty pool");
  C mu_own;
  if (mu == nullptr) {
    auto [center, center_cost] = exact_median(m, P, &pool);
    (void)center_cost;
    mu_own = std::move(center);
    mu = &mu_own;
  }
  detail::require(mu->n == 1, "centered_drift: mu is a single row");

  DriftData<C> out;
  out.mu_avg_p = avgcost(m, *mu, 0, P);
  out.mu_avg_q = avgcost(m, *mu, 0, Q);
  const auto ap = pool_avg(m, pool, P);
  const auto aq = pool_avg(m, pool, Q);

  CheckReport& rep = out.report;
  rep.property = "rcda";
  rep.eps = eps.value_or(kNaN);
  rep.eta = kNaN;
  bool any = false;
  for (std::size_t c = 0; c < pool.n; ++c) {
    if (ap[c] == 0.0) continue;  // centered deviation undefined at zero cost
    any = true;
    const double dev =
        std::abs((ap[c] - out.mu_avg_p) - (aq[c] - out.mu_avg_q)) / ap[c];
    if (dev > rep.measured) {
      rep.measured = dev;
      rep.witness_a = static_cast<std::int64_t>(c);
    }
  }
  detail::require(any, "centered_drift: every pool center has zero cost on P");
  rep.passed = eps.has_value() ? rep.measured <= *eps : true;
  return out;
}

template <class C>
FrameworkReport framework_impl(Metric m, const C& P, const C& Q, const C& pool,
                               double eps) {
  detail::require(eps > 0.0 && eps <= 0.2, "framework_implication: eps in (0, 1/5]");
  auto drift = drift_impl<C>(m, P, Q, pool, nullptr, std::nullopt);
  FrameworkReport fr;
  fr.eps = eps;
  fr.drift = drift.report.measured;
  if (drift.mu_avg_p == 0.0)
    fr.c = drift.mu_avg_q == 0.0 ? 1.0 : kInf;
  else
    fr.c = std::max(1.0, drift.mu_avg_q / drift.mu_avg_p);
  fr.premise = fr.drift <= eps && std::isfinite(fr.c);
  fr.stable = stable_impl(m, P, Q, pool, eps / fr.c, 4.0 * eps);
  fr.conclusion = fr.stable.passed;
  fr.implication = !fr.premise || fr.conclusion;
  return fr;
}

}  // namespace

CheckReport check_strong(Metric m, const PointSet& P, const PointSet& Q,
                         const PointSet& pool, double eps) {
  return strong_impl(m, P, Q, pool, eps);
}
CheckReport check_strong(Metric m, const RankingSet& P, const RankingSet& Q,
                         const RankingSet& pool, double eps) {
  return strong_impl(m, P, Q, pool, eps);
}
CheckReport check_strong(Metric m, const SetFamily& P, const SetFamily& Q,
                         const SetFamily& pool, double eps) {
  return strong_impl(m, P, Q, pool, eps);
}

CheckReport check_stable(Metric m, const PointSet& P, const PointSet& Q,
                         const PointSet& pool, double eps, double eta) {
  return stable_impl(m, P, Q, pool, eps, eta);
}
CheckReport check_stable(Metric m, const RankingSet& P, const RankingSet& Q,
                         const RankingSet& pool, double eps, double eta) {
  return stable_impl(m, P, Q, pool, eps, eta);
}
CheckReport check_stable(Metric m, const SetFamily& P, const SetFamily& Q,
                         const SetFamily& pool, double eps, double eta) {
  return stable_impl(m, P, Q, pool, eps, eta);
}

CheckReport check_weak(Metric m, const PointSet& P, const PointSet& Q,
                       const PointSet& pool, double eps, double eta) {
  return weak_impl(m, P, Q, pool, eps, eta);
}
CheckReport check_weak(Metric m, const RankingSet& P, const RankingSet& Q,
                       const RankingSet& pool, double eps, double eta) {
  return weak_impl(m, P, Q, pool, eps, eta);
}
CheckReport check_weak(Metric m, const SetFamily& P, const SetFamily& Q,
                       const SetFamily& pool, double eps, double eta) {
  return weak_impl(m, P, Q, pool, eps, eta);
}

CheckReport centered_drift(Metric m, const PointSet& P, const PointSet& Q,
                           const PointSet& pool, const PointSet* mu,
                           std::optional<double> eps) {
  return drift_impl<PointSet>(m, P, Q, pool, mu, eps).report;
}
CheckReport centered_drift(Metric m, const RankingSet& P, const RankingSet& Q,
                           const RankingSet& pool, const RankingSet* mu,
                           std::optional<double> eps) {
  return drift_impl<RankingSet>(m, P, Q, pool, mu, eps).report;
}
CheckReport centered_drift(Metric m, const SetFamily& P, const SetFamily& Q,
                           const SetFamily& pool, const SetFamily* mu,
                           std::optional<double> eps) {
  return drift_impl<SetFamily>(m, P, Q, pool, mu, eps).report;
}

FrameworkReport framework_implication(Metric m, const PointSet& P, const PointSet& Q,
                                      const PointSet& pool, double eps) {
  return framework_impl(m, P, Q, pool, eps);
}
FrameworkReport framework_implication(Metric m, const RankingSet& P, const RankingSet& Q,
                                      const RankingSet& pool, double eps) {
  return framework_impl(m, P, Q, pool, eps);
}
FrameworkReport framework_implication(Metric m, const SetFamily& P, const SetFamily& Q,
                                      const SetFamily& pool, double eps) {
  return framework_impl(m, P, Q, pool, eps);
}

}  // namespace coremed
