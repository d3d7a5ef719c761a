#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coremed/coreset.hpp"
#include "coremed/rank.hpp"

namespace coremed {

// ============================================================
// Synthetic generators
// ============================================================

// Gaussian mixture (k components, random means and scales) with optional
// per-coordinate Cauchy contamination at rate `tail`.
PointSet gen_gauss_mix(std::size_t n, std::size_t d, std::size_t k, double tail,
                       std::uint64_t seed);
PointSet gen_uniform_cube(std::size_t n, std::size_t d, std::uint64_t seed);
// Tight cluster around the origin plus one far outlier in the last row.
PointSet gen_cluster_outlier(std::size_t n, std::size_t d, double outlier_scale,
                             std::uint64_t seed);
// Repeated-insertion Mallows model around `center` (identity if null) with
// concentration theta (theta = 0 is uniform).
RankingSet gen_mallows(std::size_t n, std::size_t d, double theta, std::uint64_t seed,
                       const Ranking* center = nullptr);
// Mallows around a center built by p-biased interleaving of two item groups
// (items < d/2 are group 0). Returns the group labels too.
RankingSet gen_two_group_mallows(std::size_t n, std::size_t d, double theta, double p,
                                 std::uint64_t seed, PrefixFairness* fairness_out);
PointSet gen_random_bits(std::size_t n, std::size_t d, double density, std::uint64_t seed);
SetFamily gen_random_sets(std::size_t n, std::size_t d, double density, std::uint64_t seed);

// Resolve a --data argument: a file path, or a generator spec
// "name:key=val,...". Generator draws are seeded from the master seed.
PointSet load_points_data(const std::string& data, std::uint64_t master_seed);
RankingSet load_rankings_data(const std::string& data, std::uint64_t master_seed);
SetFamily load_sets_data(const std::string& data, std::uint64_t master_seed);

// ============================================================
// Experiments
// ============================================================

enum class Experiment { Tradeoff, Heuristics, Fairness, DimSweep, Dispersed };

// `data` is either a path (.csv for points/rankings, anything else is a sets
// file) or a generator spec "name:key=val,key=val" with names gauss, cube,
// outlier, mallows, mallows2g, bits, sets.
struct ExperimentConfig {
  Experiment experiment = Experiment::Tradeoff;
  Metric metric = Metric::L1;
  std::string data;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> dims;  // dimension sweep only
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  double eps = 0.2;
  double rho0 = 0.5, rho1 = 0.5;  // fairness floors
  std::string out;                // output path prefix
  bool timings = false;           // write the wall-clock sidecar
};

struct TrialRecord {
  std::string method;
  std::size_t dim = 0;
  std::size_t m = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double value = 0.0;  // relative error, or measured deviation for Dispersed
  bool passed = false;
  double elapsed_ms = 0.0;  // sidecar only, excluded from deterministic outputs
};

struct RunResult {
  std::vector<TrialRecord> records;
  std::uint64_t dataset_hash = 0;
  std::map<std::string, double> extras;  // experiment-specific scalars
};

// (cost of the coreset-derived center on P - cost of the full-data center on
// P) / the latter. Negative when a heuristic happens to do better on the
// coreset.
double relative_error(double cost_q_center, double cost_p_center);

RunResult run_experiment(const ExperimentConfig& cfg);

// records CSV, summary CSV and manifest JSON next to cfg.out; byte-identical
// across re-runs of the same config. Timings, when requested, go to a
// separate machine-dependent sidecar.
struct OutputPaths {
  std::string records, summary, manifest, timings;
};
OutputPaths output_paths(const ExperimentConfig& cfg);
void write_outputs(const ExperimentConfig& cfg, const RunResult& result);

// Slope per doubling of d of the mean value at the largest coreset size,
// from an ordinary least squares fit against log2(d). DimSweep analysis.
double dimsweep_slope(const std::vector<TrialRecord>& records);

std::string build_revision();

}  // namespace coremed
