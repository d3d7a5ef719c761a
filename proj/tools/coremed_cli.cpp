#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coremed/harness.hpp"
#include "coremed/io.hpp"

namespace {

using namespace coremed;

struct CheckArgs {
  std::string metric = "l1";
  std::string data;
  std::string coreset;
  std::string property;
  double eps = 0.2;
  double eta = -1.0;  // defaults to 4*eps when unset
  std::string pool = "median";
  std::size_t pool_count = 64;
  std::uint64_t pool_seed = 1;
  double pool_spread = 0.5;
  std::uint64_t seed = 1;
};

PoolSpec pool_spec_from(const CheckArgs& args) {
  PoolSpec spec;
  if (args.pool == "data")
    spec.source = PoolSource::DataRows;
  else if (args.pool == "median")
    spec.source = PoolSource::PerturbedMedian;
  else if (args.pool == "box")
    spec.source = PoolSource::RandomBox;
  else if (args.pool == "grid")
    spec.source = PoolSource::Grid;
  else
    throw std::invalid_argument("unknown pool source: " + args.pool);
  spec.count = args.pool_count;
  spec.seed = args.pool_seed;
  spec.spread = args.pool_spread;
  return spec;
}

template <class C, class LoadData, class ReadFile>
int run_check_on(const CheckArgs& args, LoadData load_data, ReadFile read_file_as) {
  const Metric metric = metric_from_string(args.metric);
  const C parent = load_data(args.data, args.seed);

  C sub;
  if (args.coreset.size() >= 5 &&
      args.coreset.compare(args.coreset.size() - 5, 5, ".json") == 0) {
    const Coreset cs = read_coreset_json(args.coreset);
    detail::require(cs.parent_hash == content_hash(parent),
                    "coreset was built from different data (parent hash mismatch)");
    sub = materialize(parent, cs);
  } else {
    sub = read_file_as(args.coreset);
  }

  const C pool = make_pool(metric, parent, pool_spec_from(args));
  const double eta = args.eta >= 0.0 ? args.eta : 4.0 * args.eps;

  CheckReport report;
  if (args.property == "strong")
    report = check_strong(metric, parent, sub, pool, args.eps);
  else if (args.property == "stable")
    report = check_stable(metric, parent, sub, pool, args.eps, eta);
  else if (args.property == "weak")
    report = check_weak(metric, parent, sub, pool, args.eps, eta);
  else if (args.property == "rcda")
    report = centered_drift(metric, parent, sub, pool, nullptr, args.eps);
  else
    throw std::invalid_argument("unknown property: " + args.property);

  std::printf("%s\n", check_report_to_json(report).c_str());
  return report.passed ? 0 : 3;
}

int run_check(const CheckArgs& args) {
  const Metric metric = metric_from_string(args.metric);
  if (metric == Metric::KendallTau) {
    return run_check_on<RankingSet>(args, load_rankings_data,
                                    [](const std::string& p) { return read_rankings_csv(p); });
  }
  if (metric == Metric::Jaccard) {
    return run_check_on<SetFamily>(args, load_sets_data,
                                   [](const std::string& p) { return read_sets_file(p); });
  }
  return run_check_on<PointSet>(args, load_points_data,
                                [](const std::string& p) { return read_points_csv(p); });
}

struct SampleSizeArgs {
  std::string formula;
  double eps = 0.2;
  double delta = 0.2;
  std::size_t d = 0;
  std::size_t space_size = 0;
  double C = 1.0;
  double K = 2.0;
};

int run_sample_size(const SampleSizeArgs& args) {
  std::size_t m = 0;
  if (args.formula == "uniform") {
    detail::require(args.d >= 1, "uniform formula needs --d");
    m = uniform_sample_size(args.eps, args.d, args.delta, args.K);
  } else if (args.formula == "finite-space") {
    detail::require(args.space_size >= 1, "finite-space formula needs --space-size");
    m = finite_space_sample_size(args.eps, args.delta, args.space_size);
  } else if (args.formula == "dispersed") {
    detail::require(args.d >= 1, "dispersed formula needs --d");
    m = dispersed_sample_size(args.eps, args.C, args.d, args.K);
  } else {
    throw std::invalid_argument("unknown formula: " + args.formula);
  }
  std::printf("%zu\n", m);
  return 0;
}

int run_configured(const ExperimentConfig& cfg) {
  const RunResult result = run_experiment(cfg);
  write_outputs(cfg, result);
  const OutputPaths paths = output_paths(cfg);
  std::printf("wrote %s\n", paths.records.c_str());
  std::printf("wrote %s\n", paths.summary.c_str());
  std::printf("wrote %s\n", paths.manifest.c_str());
  if (cfg.timings) std::printf("wrote %s\n", paths.timings.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-median coresets by uniform sampling: build, check, run experiments"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string metric_name = "l1";

  auto add_common = [&](CLI::App* sub, bool sizes_required) {
    sub->add_option("--metric", metric_name, "metric (l1, l2, hamming, kendall, jaccard)")
        ->capture_default_str();
    sub->add_option("--data", cfg.data, "data file or generator spec name:key=val,...")
        ->required();
    auto* sizes = sub->add_option("--sizes", cfg.sizes, "coreset sizes, ascending")
                      ->delimiter(',');
    if (sizes_required) sizes->required();
    sub->add_option("--trials", cfg.trials, "trials per size")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    sub->add_option("--eps", cfg.eps, "target accuracy")->capture_default_str();
    sub->add_option("--out", cfg.out, "output path prefix")->required();
    sub->add_flag("--timings", cfg.timings, "also write the wall-clock sidecar");
  };

  auto* tradeoff = app.add_subcommand(
      "tradeoff", "uniform vs sensitivity sampling error at several coreset sizes");
  add_common(tradeoff, true);

  auto* heuristics = app.add_subcommand(
      "heuristics", "rank aggregation heuristics on coresets vs the full ranking set");
  add_common(heuristics, true);

  auto* fairness = app.add_subcommand(
      "fairness", "prefix-fair exact Kendall aggregation on coresets");
  add_common(fairness, true);
  fairness->add_option("--rho0", cfg.rho0, "group 0 prefix floor")->capture_default_str();
  fairness->add_option("--rho1", cfg.rho1, "group 1 prefix floor")->capture_default_str();

  auto* dimsweep = app.add_subcommand(
      "dimsweep", "error against dimension on random coordinate subsets");
  add_common(dimsweep, true);
  dimsweep->add_option("--dims", cfg.dims, "target dimensions")->delimiter(',')->required();

  auto* dispersed = app.add_subcommand(
      "dispersed", "strong-coreset checks at the dispersion-based sample size");
  add_common(dispersed, false);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run one coreset property check");
  check->add_option("--metric", check_args.metric, "metric name")->capture_default_str();
  check->add_option("--data", check_args.data, "parent data file or generator spec")
      ->required();
  check
      ->add_option("--coreset", check_args.coreset,
                   "coreset: .json index file, or a weighted instance file")
      ->required();
  check
      ->add_option("--property", check_args.property,
                   "strong, stable, weak or rcda")
      ->required();
  check->add_option("--eps", check_args.eps, "epsilon threshold")->capture_default_str();
  check->add_option("--eta", check_args.eta, "eta threshold (default 4*eps)");
  check->add_option("--pool", check_args.pool, "center pool: data, median, box, grid")
      ->capture_default_str();
  check->add_option("--pool-count", check_args.pool_count, "pool size")
      ->capture_default_str();
  check->add_option("--pool-seed", check_args.pool_seed, "pool seed")->capture_default_str();
  check->add_option("--pool-spread", check_args.pool_spread, "perturbation scale")
      ->capture_default_str();
  check->add_option("--seed", check_args.seed, "seed for generator specs")
      ->capture_default_str();

  SampleSizeArgs size_args;
  auto* sample_size = app.add_subcommand("sample-size", "evaluate a sample size formula");
  sample_size
      ->add_option("--formula", size_args.formula, "uniform, finite-space or dispersed")
      ->required();
  sample_size->add_option("--eps", size_args.eps, "target accuracy")->capture_default_str();
  sample_size->add_option("--delta", size_args.delta, "failure probability")
      ->capture_default_str();
  sample_size->add_option("--d", size_args.d, "dimension / item count");
  sample_size->add_option("--space-size", size_args.space_size, "finite metric space size");
  sample_size->add_option("--C", size_args.C, "dispersion ratio")->capture_default_str();
  sample_size->add_option("--K", size_args.K, "leading constant")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (sample_size->parsed()) return run_sample_size(size_args);
    cfg.metric = metric_from_string(metric_name);
    if (tradeoff->parsed()) cfg.experiment = Experiment::Tradeoff;
    if (heuristics->parsed()) cfg.experiment = Experiment::Heuristics;
    if (fairness->parsed()) cfg.experiment = Experiment::Fairness;
    if (dimsweep->parsed()) cfg.experiment = Experiment::DimSweep;
    if (dispersed->parsed()) cfg.experiment = Experiment::Dispersed;
    return run_configured(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
