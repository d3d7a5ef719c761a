#include "coremed/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "coremed/io.hpp"
#include "coremed/kernels.hpp"
#include "coremed/rng.hpp"

namespace coremed {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ============================================================
// Generators
// ============================================================

PointSet gen_gauss_mix(std::size_t n, std::size_t d, std::size_t k, double tail,
                       std::uint64_t seed) {
  detail::require(n > 0 && d > 0 && k > 0, "gen_gauss_mix: positive n, d, k");
  detail::require(tail >= 0.0 && tail < 1.0, "gen_gauss_mix: tail in [0,1)");
  Rng rng(seed);
  std::vector<double> means(k * d), scales(k);
  for (double& m : means) m = rng.uniform(-10.0, 10.0);
  for (double& s : scales) s = rng.uniform(0.5, 2.0);
  PointSet ps = PointSet::zeros(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = rng.index(k);
    for (std::size_t j = 0; j < d; ++j) {
      double v = means[c * d + j] + scales[c] * rng.normal();
      if (tail > 0.0 && rng.bernoulli(tail)) v = means[c * d + j] + scales[c] * rng.cauchy();
      ps.xs[i * d + j] = v;
    }
  }
  return ps;
}

PointSet gen_uniform_cube(std::size_t n, std::size_t d, std::uint64_t seed) {
  detail::require(n > 0 && d > 0, "gen_uniform_cube: positive n, d");
  Rng rng(seed);
  PointSet ps = PointSet::zeros(n, d);
  for (double& v : ps.xs) v = rng.uniform01();
  return ps;
}

PointSet gen_cluster_outlier(std::size_t n, std::size_t d, double outlier_scale,
                             std::uint64_t seed) {
  detail::require(n >= 2 && d > 0, "gen_cluster_outlier: need at least two rows");
  Rng rng(seed);
  PointSet ps = PointSet::zeros(n, d);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < d; ++j) ps.xs[i * d + j] = 0.1 * rng.normal();
  for (std::size_t j = 0; j < d; ++j) ps.xs[(n - 1) * d + j] = outlier_scale;
  return ps;
}

RankingSet gen_mallows(std::size_t n, std::size_t d, double theta, std::uint64_t seed,
                       const Ranking* center) {
  detail::require(n > 0 && d > 0, "gen_mallows: positive n, d");
  detail::require(theta >= 0.0, "gen_mallows: theta >= 0");
  Rng rng(seed);
  std::vector<std::int32_t> base;
  if (center != nullptr) {
    detail::require(center->size() == d, "gen_mallows: center size mismatch");
    base = ranks_to_order(*center);
  } else {
    base.resize(d);
    std::iota(base.begin(), base.end(), 0);
  }
  const double phi = std::exp(-theta);
  // Repeated insertion: item t of the reference order goes to slot j of the
  // current prefix with probability proportional to phi^(t-j), so slot t
  // (no new discordant pairs) always has weight 1.
  std::vector<double> phis(d, 1.0);
  for (std::size_t k = 1; k < d; ++k) phis[k] = phis[k - 1] * phi;
  std::vector<double> cum(d);
  RankingSet rs;
  rs.n = n;
  rs.d = d;
  rs.ranks.resize(n * d);
  std::vector<std::int32_t> prefix;
  prefix.reserve(d);
  for (std::size_t i = 0; i < n; ++i) {
    prefix.clear();
    for (std::size_t t = 0; t < d; ++t) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= t; ++j) {
        acc += phis[t - j];
        cum[j] = acc;
      }
      const double u = rng.uniform01() * acc;
      const std::size_t j =
          std::min(static_cast<std::size_t>(
                       std::lower_bound(cum.begin(), cum.begin() + t + 1, u) - cum.begin()),
                   t);
      prefix.insert(prefix.begin() + static_cast<std::ptrdiff_t>(j), base[t]);
    }
    const Ranking r = order_to_ranks(prefix);
    std::copy(r.begin(), r.end(), rs.row(i).begin());
  }
  return rs;
}

RankingSet gen_two_group_mallows(std::size_t n, std::size_t d, double theta, double p,
                                 std::uint64_t seed, PrefixFairness* fairness_out) {
  detail::require(d >= 2, "gen_two_group_mallows: need at least two items");
  detail::require(p > 0.0 && p < 1.0, "gen_two_group_mallows: p in (0,1)");
  Rng rng(seed);
  const std::size_t half = d / 2;
  std::vector<std::int32_t> order;
  order.reserve(d);
  std::size_t next0 = 0, next1 = half;
  while (order.size() < d) {
    const bool g0_left = next0 < half;
    const bool g1_left = next1 < d;
    const bool pick0 = g0_left && g1_left ? rng.bernoulli(p) : g0_left;
    if (pick0)
      order.push_back(static_cast<std::int32_t>(next0++));
    else
      order.push_back(static_cast<std::int32_t>(next1++));
  }
  const Ranking center = order_to_ranks(order);
  if (fairness_out != nullptr) {
    fairness_out->group.assign(d, 0);
    for (std::size_t i = half; i < d; ++i) fairness_out->group[i] = 1;
  }
  return gen_mallows(n, d, theta, derive_seed(seed, "rows", 0), &center);
}

PointSet gen_random_bits(std::size_t n, std::size_t d, double density, std::uint64_t seed) {
  detail::require(n > 0 && d > 0, "gen_random_bits: positive n, d");
  Rng rng(seed);
  PointSet ps = PointSet::zeros(n, d);
  for (double& v : ps.xs) v = rng.bernoulli(density) ? 1.0 : 0.0;
  return ps;
}

SetFamily gen_random_sets(std::size_t n, std::size_t d, double density, std::uint64_t seed) {
  detail::require(n > 0 && d > 0, "gen_random_sets: positive n, d");
  Rng rng(seed);
  SetFamily sf = SetFamily::empty(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = 0; e < d; ++e)
      if (rng.bernoulli(density)) sf.set(i, e);
  return sf;
}

// ============================================================
// Data loading
// ============================================================

namespace {

struct GenSpec {
  std::string name;
  std::map<std::string, double> kv;

  double get(const std::string& key, double fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  }
  std::size_t get_n(const std::string& key, double fallback) const {
    const double v = get(key, fallback);
    detail::require(v >= 0.0 && v == std::floor(v), "data spec: " + key + " must be an integer");
    return static_cast<std::size_t>(v);
  }
};

bool is_gen_spec(const std::string& data) { return data.find(':') != std::string::npos; }

GenSpec parse_gen_spec(const std::string& data) {
  GenSpec spec;
  const auto colon = data.find(':');
  spec.name = data.substr(0, colon);
  const std::string rest = data.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = rest.substr(pos, comma - pos);
    if (!item.empty()) {
      const auto eq = item.find('=');
      detail::require(eq != std::string::npos, "data spec: expected key=value, got " + item);
      const std::string key = item.substr(0, eq);
      const std::string val = item.substr(eq + 1);
      char* end = nullptr;
      const double v = std::strtod(val.c_str(), &end);
      detail::require(!val.empty() && end == val.c_str() + val.size(),
                      "data spec: bad value for " + key);
      spec.kv[key] = v;
    }
    pos = comma + 1;
  }
  return spec;
}

void check_keys(const GenSpec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : spec.kv) {
    (void)v;
    bool ok = false;
    for (const char* a : allowed)
      if (k == a) ok = true;
    detail::require(ok, "data spec: unknown key " + k + " for " + spec.name);
  }
}

RankingSet load_rankings_spec(const std::string& data, std::uint64_t master,
                              PrefixFairness* fairness_out) {
  if (!is_gen_spec(data)) {
    detail::require(fairness_out == nullptr,
                    "fairness groups come from the mallows2g generator only");
    return read_rankings_csv(data);
  }
  const GenSpec spec = parse_gen_spec(data);
  const std::uint64_t seed = derive_seed(master, "data", 0);
  if (spec.name == "mallows") {
    check_keys(spec, {"n", "d", "theta"});
    detail::require(fairness_out == nullptr,
                    "fairness groups come from the mallows2g generator only");
    return gen_mallows(spec.get_n("n", 1000), spec.get_n("d", 10), spec.get("theta", 0.2),
                       seed);
  }
  if (spec.name == "mallows2g") {
    check_keys(spec, {"n", "d", "theta", "p"});
    return gen_two_group_mallows(spec.get_n("n", 1000), spec.get_n("d", 8),
                                 spec.get("theta", 0.2), spec.get("p", 0.7), seed,
                                 fairness_out);
  }
  throw std::invalid_argument("data spec: " + spec.name + " does not generate rankings");
}

}  // namespace

PointSet load_points_data(const std::string& data, std::uint64_t master_seed) {
  if (!is_gen_spec(data)) return read_points_csv(data);
  const GenSpec spec = parse_gen_spec(data);
  const std::uint64_t seed = derive_seed(master_seed, "data", 0);
  if (spec.name == "gauss") {
    check_keys(spec, {"n", "d", "k", "tail"});
    return gen_gauss_mix(spec.get_n("n", 1000), spec.get_n("d", 10), spec.get_n("k", 3),
                         spec.get("tail", 0.0), seed);
  }
  if (spec.name == "cube") {
    check_keys(spec, {"n", "d"});
    return gen_uniform_cube(spec.get_n("n", 1000), spec.get_n("d", 8), seed);
  }
  if (spec.name == "outlier") {
    check_keys(spec, {"n", "d", "scale"});
    return gen_cluster_outlier(spec.get_n("n", 500), spec.get_n("d", 4),
                               spec.get("scale", 50.0), seed);
  }
  if (spec.name == "bits") {
    check_keys(spec, {"n", "d", "density"});
    return gen_random_bits(spec.get_n("n", 1000), spec.get_n("d", 16),
                           spec.get("density", 0.5), seed);
  }
  throw std::invalid_argument("data spec: " + spec.name + " does not generate points");
}

RankingSet load_rankings_data(const std::string& data, std::uint64_t master_seed) {
  return load_rankings_spec(data, master_seed, nullptr);
}

SetFamily load_sets_data(const std::string& data, std::uint64_t master_seed) {
  if (!is_gen_spec(data)) return read_sets_file(data);
  const GenSpec spec = parse_gen_spec(data);
  detail::require(spec.name == "sets",
                  "data spec: " + spec.name + " does not generate set families");
  check_keys(spec, {"n", "d", "density"});
  return gen_random_sets(spec.get_n("n", 1000), spec.get_n("d", 16),
                         spec.get("density", 0.3), derive_seed(master_seed, "data", 0));
}

// ============================================================
// Experiments
// ============================================================

namespace {

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  const auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t dim, std::size_t m,
                         std::size_t trial) {
  return derive_seed(master, "coreset", (dim * 1000003 + m) * 10007 + trial);
}

PointSet one_point(std::vector<double> xs) {
  PointSet ps;
  ps.n = 1;
  ps.d = xs.size();
  ps.xs = std::move(xs);
  return ps;
}

void require_sizes(const ExperimentConfig& cfg) {
  detail::require(!cfg.sizes.empty(), "config: need at least one coreset size");
  detail::require(std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()),
                  "config: sizes must be ascending");
}

// Experiment 1: uniform against 1- and 2-round sensitivity sampling, centers
// extracted by the coordinate-wise weighted median, errors on the full set.
RunResult tradeoff_impl(const ExperimentConfig& cfg) {
  detail::require(cfg.metric == Metric::L1 || cfg.metric == Metric::L2,
                  "tradeoff: l1 or l2 only");
  require_sizes(cfg);
  const PointSet inst = load_points_data(cfg.data, cfg.seed);
  RunResult rr;
  rr.dataset_hash = content_hash(inst);

  const PointSet best = one_point(l1_median(inst));
  const double base = cost(cfg.metric, best, 0, inst);
  detail::require(base > 0.0, "tradeoff: degenerate instance");

  const std::vector<std::string> methods = {"uniform", "sensitivity1", "sensitivity2"};
  for (std::size_t m : cfg.sizes) {
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed =
            derive_seed(trial_seed(cfg.seed, inst.d, m, t), methods[mi], 0);
        const auto t0 = std::chrono::steady_clock::now();
        const Coreset cs = mi == 0
                               ? uniform_sample(inst, m, seed)
                               : sensitivity_sample(cfg.metric, inst, m, seed, mi == 1 ? 1 : 2);
        const double built_ms = elapsed_ms_since(t0);
        const PointSet sub = materialize(inst, cs);
        const PointSet center = one_point(l1_median(sub));
        const double err = relative_error(cost(cfg.metric, center, 0, inst), base);
        rr.records.push_back({methods[mi], inst.d, m, t, seed, err, err <= cfg.eps, built_ms});
      }
    }
  }
  return rr;
}

// Experiment 2: rank aggregation heuristics on the coreset against the same
// heuristic on the full set, costs always measured on the full set.
RunResult heuristics_impl(const ExperimentConfig& cfg) {
  detail::require(cfg.metric == Metric::KendallTau, "heuristics: kendall only");
  require_sizes(cfg);
  const RankingSet inst = load_rankings_spec(cfg.data, cfg.seed, nullptr);
  RunResult rr;
  rr.dataset_hash = content_hash(inst);
  const auto counts = pair_preference_counts(inst);

  const std::vector<std::string> methods = {"borda", "mc1", "mc2", "mc3", "sfo"};
  auto aggregate = [](const RankingSet& rs, std::size_t mi) -> Ranking {
    if (mi == 0) return borda(rs);
    if (mi <= 3) {
      McOptions opt;
      opt.variant = static_cast<int>(mi);
      return mc_aggregate(rs, opt);
    }
    return footrule_aggregate(rs);
  };

  std::vector<double> base(methods.size());
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    const Ranking c = aggregate(inst, mi);
    base[mi] = kendall_cost_from_counts(counts, inst.d, c);
    detail::require(base[mi] > 0.0, "heuristics: degenerate instance");
  }

  for (std::size_t m : cfg.sizes) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.seed, inst.d, m, t);
      const Coreset cs = uniform_sample(inst, m, seed);
      const RankingSet sub = materialize(inst, cs);
      for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const auto t0 = std::chrono::steady_clock::now();
        const Ranking c = aggregate(sub, mi);
        const double agg_ms = elapsed_ms_since(t0);
        const double err =
            relative_error(kendall_cost_from_counts(counts, inst.d, c), base[mi]);
        rr.records.push_back(
            {methods[mi], inst.d, m, t, seed, err, std::abs(err) <= cfg.eps, agg_ms});
      }
    }
  }
  return rr;
}

// Experiment 3: prefix-fair exact aggregation on coresets.
RunResult fairness_impl(const ExperimentConfig& cfg) {
  detail::require(cfg.metric == Metric::KendallTau, "fairness: kendall only");
  require_sizes(cfg);
  PrefixFairness fair;
  const RankingSet inst = load_rankings_spec(cfg.data, cfg.seed, &fair);
  fair.rho0 = cfg.rho0;
  fair.rho1 = cfg.rho1;
  detail::require(inst.d <= 8, "fairness: exact aggregation capped at 8 items");
  detail::require(fairness_feasible(fair, inst.d), "fairness: floors admit no ranking");

  RunResult rr;
  rr.dataset_hash = content_hash(inst);
  const auto counts = pair_preference_counts(inst);
  const MedianRanking ref = kendall_median_exact(inst, &fair);
  detail::require(ref.cost_value > 0.0, "fairness: degenerate instance");

  for (std::size_t m : cfg.sizes) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.seed, inst.d, m, t);
      const auto t0 = std::chrono::steady_clock::now();
      const Coreset cs = uniform_sample(inst, m, seed);
      const RankingSet sub = materialize(inst, cs);
      const MedianRanking got = kendall_median_exact(sub, &fair);
      const double solved_ms = elapsed_ms_since(t0);
      const double err = relative_error(
          kendall_cost_from_counts(counts, inst.d, got.center), ref.cost_value);
      rr.records.push_back({"uniform-fair", inst.d, m, t, seed, err, err <= cfg.eps, solved_ms});
    }
  }
  return rr;
}

PointSet pick_columns(const PointSet& inst, const std::vector<std::size_t>& cols) {
  PointSet out = PointSet::zeros(inst.n, cols.size());
  out.weights = inst.weights;
  for (std::size_t i = 0; i < inst.n; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.xs[i * cols.size() + j] = inst.xs[i * inst.d + cols[j]];
  return out;
}

// Experiment 4: error against dimension, coordinates subsampled per target d.
RunResult dimsweep_impl(const ExperimentConfig& cfg) {
  detail::require(cfg.metric == Metric::L1, "dimsweep: l1 only");
  require_sizes(cfg);
  detail::require(!cfg.dims.empty(), "dimsweep: need target dims");
  const PointSet full = load_points_data(cfg.data, cfg.seed);
  RunResult rr;
  rr.dataset_hash = content_hash(full);

  for (std::size_t dim : cfg.dims) {
    detail::require(dim >= 1 && dim <= full.d, "dimsweep: dim exceeds the data dimension");
    Rng col_rng(derive_seed(cfg.seed, "dims", dim));
    std::vector<std::size_t> cols(full.d);
    std::iota(cols.begin(), cols.end(), 0);
    for (std::size_t i = 0; i < dim; ++i)
      std::swap(cols[i], cols[i + col_rng.index(full.d - i)]);
    cols.resize(dim);
    std::sort(cols.begin(), cols.end());
    const PointSet inst = pick_columns(full, cols);

    const PointSet best = one_point(l1_median(inst));
    const double base = cost(cfg.metric, best, 0, inst);
    detail::require(base > 0.0, "dimsweep: degenerate instance");
    for (std::size_t m : cfg.sizes) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t seed = trial_seed(cfg.seed, dim, m, t);
        const auto t0 = std::chrono::steady_clock::now();
        const Coreset cs = uniform_sample(inst, m, seed);
        const double built_ms = elapsed_ms_since(t0);
        const PointSet sub = materialize(inst, cs);
        const PointSet center = one_point(l1_median(sub));
        const double err = relative_error(cost(cfg.metric, center, 0, inst), base);
        rr.records.push_back({"uniform", dim, m, t, seed, err, err <= cfg.eps, built_ms});
      }
    }
  }
  for (std::size_t m : cfg.sizes) {
    std::vector<TrialRecord> at_m;
    for (const TrialRecord& r : rr.records)
      if (r.m == m) at_m.push_back(r);
    rr.extras["slope_m" + std::to_string(m)] = dimsweep_slope(at_m);
  }
  return rr;
}

// Bounded-dispersion strong coresets, plus the far-outlier contrast where the
// strong check breaks while the stable check holds.
RunResult dispersed_impl(const ExperimentConfig& cfg) {
  detail::require(cfg.metric == Metric::L1, "dispersed: l1 only");
  const PointSet inst = load_points_data(cfg.data, cfg.seed);
  RunResult rr;
  rr.dataset_hash = content_hash(inst);

  const InstanceStats stats = instance_stats(cfg.metric, inst);
  const std::size_t formula_m = dispersed_sample_size(cfg.eps, stats.dispersion_c, inst.d);
  std::vector<std::size_t> sizes = cfg.sizes;
  if (sizes.empty()) sizes.push_back(formula_m);
  rr.extras["dispersion_c"] = stats.dispersion_c;
  rr.extras["formula_size"] = static_cast<double>(formula_m);

  PoolSpec near_spec;
  near_spec.source = PoolSource::PerturbedMedian;
  near_spec.count = 250;
  near_spec.seed = derive_seed(cfg.seed, "pool", 0);
  PoolSpec box_spec;
  box_spec.source = PoolSource::RandomBox;
  box_spec.count = 250;
  box_spec.seed = derive_seed(cfg.seed, "pool", 1);
  PointSet pool = make_pool(cfg.metric, inst, near_spec);
  append_rows(pool, make_pool(cfg.metric, inst, box_spec));

  for (std::size_t m : sizes) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.seed, inst.d, m, t);
      const auto t0 = std::chrono::steady_clock::now();
      const Coreset cs = uniform_sample(inst, m, seed);
      const double built_ms = elapsed_ms_since(t0);
      const PointSet sub = materialize(inst, cs);
      const CheckReport sg = check_strong(cfg.metric, inst, sub, pool, cfg.eps);
      rr.records.push_back({"strong", inst.d, m, t, seed, sg.measured, sg.passed, built_ms});
      const CheckReport st =
          check_stable(cfg.metric, inst, sub, pool, cfg.eps / 6.0, 4.0 * cfg.eps);
      rr.records.push_back({"stable", inst.d, m, t, seed, st.measured, st.passed, built_ms});
    }
  }
  return rr;
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Tradeoff: return "tradeoff";
    case Experiment::Heuristics: return "heuristics";
    case Experiment::Fairness: return "fairness";
    case Experiment::DimSweep: return "dimsweep";
    case Experiment::Dispersed: return "dispersed";
  }
  return "unknown";
}

}  // namespace

double relative_error(double cost_q_center, double cost_p_center) {
  detail::require(cost_p_center > 0.0, "relative_error: zero reference cost");
  return (cost_q_center - cost_p_center) / cost_p_center;
}

RunResult run_experiment(const ExperimentConfig& cfg) {
  detail::require(cfg.trials >= 1, "config: trials >= 1");
  detail::require(cfg.eps > 0.0, "config: eps > 0");
  detail::require(!cfg.data.empty(), "config: data is required");
  switch (cfg.experiment) {
    case Experiment::Tradeoff: return tradeoff_impl(cfg);
    case Experiment::Heuristics: return heuristics_impl(cfg);
    case Experiment::Fairness: return fairness_impl(cfg);
    case Experiment::DimSweep: return dimsweep_impl(cfg);
    case Experiment::Dispersed: return dispersed_impl(cfg);
  }
  throw std::invalid_argument("config: bad experiment");
}

OutputPaths output_paths(const ExperimentConfig& cfg) {
  detail::require(!cfg.out.empty(), "config: out prefix is required");
  OutputPaths p;
  p.records = cfg.out + "_records.csv";
  p.summary = cfg.out + "_summary.csv";
  p.manifest = cfg.out + "_manifest.json";
  p.timings = cfg.out + "_timings.csv";
  return p;
}

void write_outputs(const ExperimentConfig& cfg, const RunResult& result) {
  const OutputPaths paths = output_paths(cfg);
  const auto parent = std::filesystem::path(paths.records).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  const std::string ename = experiment_name(cfg.experiment);

  std::string rec = "experiment,method,dim,m,trial,seed,value,passed\n";
  for (const TrialRecord& r : result.records) {
    rec += ename + ',' + r.method + ',' + std::to_string(r.dim) + ',' +
           std::to_string(r.m) + ',' + std::to_string(r.trial) + ',' +
           std::to_string(r.seed) + ',' + format_double(r.value) + ',' +
           (r.passed ? "1" : "0") + '\n';
  }
  write_file(paths.records, rec);

  std::map<std::tuple<std::string, std::size_t, std::size_t>,
           std::vector<const TrialRecord*>>
      groups;
  for (const TrialRecord& r : result.records) groups[{r.method, r.dim, r.m}].push_back(&r);
  std::string sum_csv = "experiment,method,dim,m,trials,mean_value,std_value,pass_rate\n";
  for (const auto& [key, rows] : groups) {
    const auto& [method, dim, m] = key;
    const double count = static_cast<double>(rows.size());
    double sum = 0.0;
    std::size_t passes = 0;
    for (const TrialRecord* r : rows) {
      sum += r->value;
      if (r->passed) ++passes;
    }
    const double mean = sum / count;
    double sq = 0.0;
    for (const TrialRecord* r : rows) sq += (r->value - mean) * (r->value - mean);
    const double sd = rows.size() > 1 ? std::sqrt(sq / (count - 1.0)) : 0.0;
    sum_csv += ename + ',' + method + ',' + std::to_string(dim) + ',' +
               std::to_string(m) + ',' + std::to_string(rows.size()) + ',' +
               format_double(mean) + ',' + format_double(sd) + ',' +
               format_double(static_cast<double>(passes) / count) + '\n';
  }
  write_file(paths.summary, sum_csv);

  nlohmann::json manifest;
  manifest["schema_version"] = 1;
  manifest["experiment"] = ename;
  manifest["metric"] = to_string(cfg.metric);
  manifest["data"] = cfg.data;
  manifest["sizes"] = cfg.sizes;
  manifest["dims"] = cfg.dims;
  manifest["trials"] = cfg.trials;
  manifest["seed"] = cfg.seed;
  manifest["eps"] = cfg.eps;
  if (cfg.experiment == Experiment::Fairness) {
    manifest["rho0"] = cfg.rho0;
    manifest["rho1"] = cfg.rho1;
  }
  char hash_buf[32];
  std::snprintf(hash_buf, sizeof hash_buf, "%016llx",
                static_cast<unsigned long long>(result.dataset_hash));
  manifest["dataset_hash"] = hash_buf;
  manifest["revision"] = build_revision();
  nlohmann::json extras = nlohmann::json::object();
  for (const auto& [k, v] : result.extras)
    extras[k] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_double(v));
  manifest["extras"] = extras;
  write_file(paths.manifest, manifest.dump(2) + "\n");

  if (cfg.timings) {
    std::string tm = "method,dim,m,trial,elapsed_ms\n";
    for (const TrialRecord& r : result.records) {
      tm += r.method + ',' + std::to_string(r.dim) + ',' + std::to_string(r.m) + ',' +
            std::to_string(r.trial) + ',' + format_double(r.elapsed_ms) + '\n';
    }
    write_file(paths.timings, tm);
  }
}

double dimsweep_slope(const std::vector<TrialRecord>& records) {
  detail::require(!records.empty(), "dimsweep_slope: no records");
  std::size_t m_max = 0;
  for (const TrialRecord& r : records) m_max = std::max(m_max, r.m);
  std::map<std::size_t, std::pair<double, std::size_t>> by_dim;
  for (const TrialRecord& r : records) {
    if (r.m != m_max) continue;
    auto& [sum, count] = by_dim[r.dim];
    sum += r.value;
    ++count;
  }
  detail::require(by_dim.size() >= 2, "dimsweep_slope: need at least two dims");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double k = static_cast<double>(by_dim.size());
  for (const auto& [dim, agg] : by_dim) {
    const double x = std::log2(static_cast<double>(dim));
    const double y = agg.first / static_cast<double>(agg.second);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string build_revision() {
#ifdef COREMED_GIT_REV
  return COREMED_GIT_REV;
#else
  return "unknown";
#endif
}

}  // namespace coremed
