#pragma once

#include <cstdint>
#include <optional>

#include "coremed/metrics.hpp"

namespace coremed {

// ============================================================
// Sample size formulas
// ============================================================

// ceil(K/eps^2 * ln(2d/delta)): uniform construction target size.
std::size_t uniform_sample_size(double eps, std::size_t d, double delta, double K = 2.0);
double uniform_sample_size_raw(double eps, std::size_t d, double delta, double K = 2.0);

// ceil(64/eps^2 * (2 ln|X| + ln(1/delta))): finite metric space bound.
std::size_t finite_space_sample_size(double eps, double delta, std::size_t space_size);

// ceil(K C^2/eps^2 * ln(2d)): bounded-dispersion strong coreset size.
std::size_t dispersed_sample_size(double eps, double C, std::size_t d, double K = 2.0);

// ============================================================
// Sampling
// ============================================================

// m i.i.d. draws with replacement, each carrying weight n/m (for a weighted
// parent: rows drawn proportionally to weight, each carrying W/m).
Coreset uniform_sample(const PointSet& inst, std::size_t m, std::uint64_t seed);
Coreset uniform_sample(const RankingSet& inst, std::size_t m, std::uint64_t seed);
Coreset uniform_sample(const SetFamily& inst, std::size_t m, std::uint64_t seed);

// Importance sampling against the coordinate-wise median: row p is drawn with
// q(p) proportional to 1/n + dist(p, c)/cost(c, P) and weighted 1/(m q(p)).
// If every point sits on the median this degrades to uniform. iterations=2
// first builds an oversized round (m * ceil(log2 n)) and resamples it down.
Coreset sensitivity_sample(Metric m, const PointSet& inst, std::size_t size,
                           std::uint64_t seed, int iterations = 1);

// ============================================================
// Center pools
// ============================================================

enum class PoolSource { DataRows, PerturbedMedian, RandomBox, Grid };

struct PoolSpec {
  PoolSource source = PoolSource::DataRows;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double spread = 0.5;  // perturbation scale relative to the data spread
};

// Finite surrogate for "every center in the space". PerturbedMedian puts the
// unperturbed median in row 0, which the weak/stable hierarchy relies on.
PointSet make_pool(Metric m, const PointSet& inst, const PoolSpec& spec);
RankingSet make_pool(Metric m, const RankingSet& inst, const PoolSpec& spec);
SetFamily make_pool(Metric m, const SetFamily& inst, const PoolSpec& spec);

// ============================================================
// Checks
// ============================================================

struct CheckReport {
  std::string property;  // "strong" | "stable" | "weak" | "rcda" | "approximation"
  bool passed = false;
  double measured = 0.0;
  double eps = 0.0;
  double eta = 0.0;          // nan when the property has no eta
  std::int64_t witness_a = -1;  // pool row achieving `measured`, -1 if vacuous
  std::int64_t witness_b = -1;  // second row for pairwise properties
};

// Largest axis CDF discrepancy between a sub-multiset and its parent: the
// sup over coordinates i and thresholds r of |Q{x[i]<=r}/|Q| - P{x[i]<=r}/|P||,
// on unweighted multiset counts. Exact via a merged breakpoint scan.
double threshold_discrepancy(const PointSet& parent, const PointSet& sub);

// Max over pool centers of |avgcost(c,Q) - avgcost(c,P)| / avgcost(c,P).
// Centers with avgcost(c,P) = 0 demand avgcost(c,Q) = 0 (else +inf).
CheckReport check_strong(Metric m, const PointSet& P, const PointSet& Q,
                         const PointSet& pool, double eps);
CheckReport check_strong(Metric m, const RankingSet& P, const RankingSet& Q,
                         const RankingSet& pool, double eps);
CheckReport check_strong(Metric m, const SetFamily& P, const SetFamily& Q,
                         const SetFamily& pool, double eps);

// Over every ordered pool pair (c1, c2) whose Q costs satisfy
// cost(c1,Q) <= (1+eps) cost(c2,Q): requires cost(c1,P) <= (1+eta) cost(c2,P).
// `measured` is the worst cost(c1,P)/cost(c2,P) - 1 among firing pairs.
CheckReport check_stable(Metric m, const PointSet& P, const PointSet& Q,
                         const PointSet& pool, double eps, double eta);
CheckReport check_stable(Metric m, const RankingSet& P, const RankingSet& Q,
                         const RankingSet& pool, double eps, double eta);
CheckReport check_stable(Metric m, const SetFamily& P, const SetFamily& Q,
                         const SetFamily& pool, double eps, double eta);

// Near-optimal centers on Q must be near-optimal on P. opt(Q) is the best of
// the pool and the exact median of Q; opt(P) comes from the exact median of P
// (pool-restricted where no closed form or enumeration applies).
CheckReport check_weak(Metric m, const PointSet& P, const PointSet& Q,
                       const PointSet& pool, double eps, double eta);
CheckReport check_weak(Metric m, const RankingSet& P, const RankingSet& Q,
                       const RankingSet& pool, double eps, double eta);
CheckReport check_weak(Metric m, const SetFamily& P, const SetFamily& Q,
                       const SetFamily& pool, double eps, double eta);

// Worst relative drift of centered average costs over the pool:
//   |[avgcost(x,P) - avgcost(mu,P)] - [avgcost(x,Q) - avgcost(mu,Q)]| / avgcost(x,P)
// with mu the exact median of P (or a supplied center). Pool rows with
// avgcost(x,P) = 0 are skipped; all-degenerate pools throw. When `eps` is
// given the report carries passed = measured <= eps.
CheckReport centered_drift(Metric m, const PointSet& P, const PointSet& Q,
                           const PointSet& pool, const PointSet* mu = nullptr,
                           std::optional<double> eps = std::nullopt);
CheckReport centered_drift(Metric m, const RankingSet& P, const RankingSet& Q,
                           const RankingSet& pool, const RankingSet* mu = nullptr,
                           std::optional<double> eps = std::nullopt);
CheckReport centered_drift(Metric m, const SetFamily& P, const SetFamily& Q,
                           const SetFamily& pool, const SetFamily* mu = nullptr,
                           std::optional<double> eps = std::nullopt);

// Bounded drift plus a bounded cost ratio at the median implies stability:
// if centered_drift <= eps and avgcost(mu,Q) <= c avgcost(mu,P) then
// check_stable(eps/c, 4 eps) must pass on the same pool. The premise is
// measured (c is taken from the data), the conclusion is checked.
struct FrameworkReport {
  bool premise = false;
  bool conclusion = false;
  bool implication = false;  // !premise || conclusion
  double c = 1.0;
  double drift = 0.0;
  double eps = 0.0;
  CheckReport stable;
};

FrameworkReport framework_implication(Metric m, const PointSet& P, const PointSet& Q,
                                      const PointSet& pool, double eps);
FrameworkReport framework_implication(Metric m, const RankingSet& P, const RankingSet& Q,
                                      const RankingSet& pool, double eps);
FrameworkReport framework_implication(Metric m, const SetFamily& P, const SetFamily& Q,
                                      const SetFamily& pool, double eps);

}  // namespace coremed
