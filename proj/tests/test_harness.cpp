#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>

#include "coremed/harness.hpp"
#include "coremed/io.hpp"
#include "coremed/metrics.hpp"

using namespace coremed;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("coremed_harness_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generators are seed deterministic") {
  PointSet a = gen_gauss_mix(50, 4, 3, 0.01, 9);
  PointSet b = gen_gauss_mix(50, 4, 3, 0.01, 9);
  PointSet c = gen_gauss_mix(50, 4, 3, 0.01, 10);
  CHECK(a.xs == b.xs);
  CHECK(a.xs != c.xs);

  RankingSet r1 = gen_mallows(30, 6, 0.5, 4);
  RankingSet r2 = gen_mallows(30, 6, 0.5, 4);
  CHECK(r1.ranks == r2.ranks);
}

TEST_CASE("generator shapes and ranges") {
  PointSet cube = gen_uniform_cube(100, 3, 5);
  CHECK(cube.n == 100);
  CHECK(cube.d == 3);
  for (double v : cube.xs) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }

  PointSet bits = gen_random_bits(80, 5, 0.3, 6);
  for (double v : bits.xs) CHECK((v == 0.0 || v == 1.0));

  SetFamily sets = gen_random_sets(40, 12, 0.5, 7);
  CHECK(sets.n == 40);
  CHECK(sets.d == 12);
}

TEST_CASE("cluster plus outlier puts the outlier in the last row") {
  PointSet p = gen_cluster_outlier(20, 3, 50.0, 8);
  for (std::size_t j = 0; j < 3; ++j) CHECK(p.row(19)[j] == 50.0);
  for (std::size_t i = 0; i + 1 < 20; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(p.row(i)[j]) < 5.0);
}

TEST_CASE("mallows rows are permutations and concentrate with theta") {
  RankingSet loose = gen_mallows(200, 5, 0.0, 11);
  RankingSet tight = gen_mallows(200, 5, 4.0, 11);
  std::size_t loose_id = 0, tight_id = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    CHECK(is_permutation_row(loose.row(i)));
    CHECK(is_permutation_row(tight.row(i)));
    auto is_id = [](std::span<const std::int32_t> r) {
      for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != std::int32_t(j)) return false;
      return true;
    };
    loose_id += is_id(loose.row(i));
    tight_id += is_id(tight.row(i));
  }
  CHECK(tight_id > 150);  // e^-4 per swap pins most rows to the center
  CHECK(loose_id < 50);   // uniform: 1/120 per row on average

  Ranking center = {4, 3, 2, 1, 0};
  RankingSet shifted = gen_mallows(50, 5, 6.0, 12, &center);
  std::size_t at_center = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    bool eq = true;
    for (std::size_t j = 0; j < 5; ++j) eq &= (shifted.row(i)[j] == center[j]);
    at_center += eq;
  }
  CHECK(at_center > 40);
}

TEST_CASE("two group mallows labels items by half") {
  PrefixFairness fair;
  RankingSet rs = gen_two_group_mallows(60, 8, 0.3, 0.5, 13, &fair);
  CHECK(rs.n == 60);
  REQUIRE(fair.group.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(fair.group[i] == (i < 4 ? 0 : 1));
  for (std::size_t i = 0; i < rs.n; ++i) CHECK(is_permutation_row(rs.row(i)));
}

TEST_CASE("data specs parse or reject") {
  PointSet g = load_points_data("gauss:n=40,d=3,k=2,tail=0.01", 5);
  CHECK(g.n == 40);
  CHECK(g.d == 3);
  PointSet g2 = load_points_data("gauss:n=40,d=3,k=2,tail=0.01", 5);
  CHECK(g.xs == g2.xs);  // same master seed, same data

  CHECK_THROWS(load_points_data("gauss:n=40,d=3,bogus=1", 5));
  CHECK_THROWS(load_points_data("nosuch:n=4", 5));
  CHECK_THROWS(load_points_data("mallows:n=10,d=4", 5));  // rankings generator
  CHECK_THROWS(load_rankings_data("gauss:n=10,d=4", 5));

  RankingSet m = load_rankings_data("mallows:n=25,d=5,theta=0.2", 6);
  CHECK(m.n == 25);
  SetFamily s = load_sets_data("sets:n=12,d=9,density=0.4", 7);
  CHECK(s.d == 9);
}

TEST_CASE("data specs also accept files") {
  TempDir td;
  PointSet p = PointSet::zeros(4, 2);
  p.xs = {0, 0, 1, 0, 0, 1, 1, 1};
  const auto path = td.file("pts.csv");
  write_points_csv(path, p);
  PointSet back = load_points_data(path, 99);
  CHECK(back.xs == p.xs);
}

TEST_CASE("relative_error") {
  CHECK(relative_error(110.0, 100.0) == doctest::Approx(0.1));
  CHECK(relative_error(95.0, 100.0) == doctest::Approx(-0.05));
  CHECK_THROWS(relative_error(1.0, 0.0));
}

TEST_CASE("tradeoff experiment produces full record grids and sane errors") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Tradeoff;
  cfg.metric = Metric::L1;
  cfg.data = "gauss:n=1500,d=6,k=3,tail=0.01";
  cfg.sizes = {60, 120};
  cfg.trials = 4;
  cfg.seed = 21;
  cfg.eps = 0.2;
  RunResult res = run_experiment(cfg);
  CHECK(res.records.size() == 3 * 2 * 4);  // methods * sizes * trials
  double worst = 0.0;
  for (const auto& r : res.records) {
    CHECK(r.value >= 0.0);
    CHECK((r.method == "uniform" || r.method == "sensitivity1" || r.method == "sensitivity2"));
    worst = std::max(worst, r.value);
  }
  CHECK(worst < 0.5);  // a 120 of 1500 sample cannot be this far off
  CHECK(res.dataset_hash != 0);
}

TEST_CASE("experiments are reproducible end to end") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Heuristics;
  cfg.metric = Metric::KendallTau;
  cfg.data = "mallows:n=400,d=6,theta=0.3";
  cfg.sizes = {50};
  cfg.trials = 3;
  cfg.seed = 31;
  RunResult a = run_experiment(cfg);
  RunResult b = run_experiment(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].value == b.records[i].value);
    CHECK(a.records[i].seed == b.records[i].seed);
  }
  CHECK(a.records.size() == 5 * 3);  // five aggregation methods
}

TEST_CASE("fairness experiment respects the floors") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Fairness;
  cfg.metric = Metric::KendallTau;
  cfg.data = "mallows2g:n=300,d=6,theta=0.3,p=0.5";
  cfg.sizes = {40, 80};
  cfg.trials = 3;
  cfg.seed = 41;
  cfg.rho0 = 0.3;
  cfg.rho1 = 0.3;
  RunResult res = run_experiment(cfg);
  CHECK(res.records.size() == 2 * 3);
  for (const auto& r : res.records) CHECK(r.value >= 0.0);
}

TEST_CASE("dimsweep records slopes per size") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::DimSweep;
  cfg.metric = Metric::L1;
  cfg.data = "gauss:n=800,d=32,k=3,tail=0.01";
  cfg.sizes = {80, 160};
  cfg.dims = {4, 8, 16};
  cfg.trials = 3;
  cfg.seed = 51;
  RunResult res = run_experiment(cfg);
  CHECK(res.records.size() == 3 * 2 * 3);  // dims * sizes * trials
  CHECK(res.extras.count("slope_m80") == 1);
  CHECK(res.extras.count("slope_m160") == 1);
  for (const auto& r : res.records) CHECK(r.dim <= 16);
}

TEST_CASE("dispersed experiment defaults to the formula size") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Dispersed;
  cfg.metric = Metric::L1;
  cfg.data = "cube:n=400,d=4";
  cfg.trials = 2;
  cfg.seed = 61;
  cfg.eps = 0.2;
  RunResult res = run_experiment(cfg);
  REQUIRE(res.extras.count("dispersion_c") == 1);
  REQUIRE(res.extras.count("formula_size") == 1);
  CHECK(res.extras["dispersion_c"] >= 1.0);
  const auto want = dispersed_sample_size(0.2, res.extras["dispersion_c"], 4);
  CHECK(res.extras["formula_size"] == double(want));
  // strong and stable records per trial
  CHECK(res.records.size() == 2 * 2);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Tradeoff;
  cfg.data = "gauss:n=100,d=3";
  cfg.sizes = {};
  CHECK_THROWS(run_experiment(cfg));
  cfg.sizes = {50, 20};  // not ascending
  CHECK_THROWS(run_experiment(cfg));
  cfg.sizes = {20};
  cfg.trials = 0;
  CHECK_THROWS(run_experiment(cfg));
}

TEST_CASE("write_outputs emits byte stable files") {
  TempDir td;
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Tradeoff;
  cfg.metric = Metric::L1;
  cfg.data = "gauss:n=300,d=4,k=2,tail=0";
  cfg.sizes = {30};
  cfg.trials = 2;
  cfg.seed = 71;
  cfg.out = td.file("runA");
  RunResult res = run_experiment(cfg);
  write_outputs(cfg, res);
  auto pa = output_paths(cfg);
  cfg.out = td.file("runB");
  write_outputs(cfg, res);
  auto pb = output_paths(cfg);
  CHECK(read_file(pa.records) == read_file(pb.records));
  CHECK(read_file(pa.summary) == read_file(pb.summary));
  CHECK(read_file(pa.manifest) == read_file(pb.manifest));
  CHECK(!std::filesystem::exists(pa.timings));  // sidecar is opt-in

  const auto rec = read_file(pa.records);
  CHECK(rec.rfind("experiment,method,dim,m,trial,seed,value,passed", 0) == 0);
  const auto sum = read_file(pa.summary);
  CHECK(sum.rfind("experiment,method,dim,m,trials,mean_value,std_value,pass_rate", 0) == 0);

  cfg.timings = true;
  cfg.out = td.file("runC");
  write_outputs(cfg, res);
  CHECK(std::filesystem::exists(output_paths(cfg).timings));
  // the deterministic trio ignores the flag
  CHECK(read_file(output_paths(cfg).manifest) == read_file(pa.manifest));
}

TEST_CASE("summary means match the records") {
  TempDir td;
  ExperimentConfig cfg;
  cfg.experiment = Experiment::Heuristics;
  cfg.metric = Metric::KendallTau;
  cfg.data = "mallows:n=200,d=5,theta=0.4";
  cfg.sizes = {40};
  cfg.trials = 4;
  cfg.seed = 81;
  cfg.out = td.file("sum");
  RunResult res = run_experiment(cfg);
  write_outputs(cfg, res);
  double borda_mean = 0.0;
  int cnt = 0;
  for (const auto& r : res.records)
    if (r.method == "borda") {
      borda_mean += r.value;
      ++cnt;
    }
  borda_mean /= cnt;
  const auto sum = read_file(output_paths(cfg).summary);
  CHECK(sum.find("heuristics,borda") != std::string::npos);
  CHECK(sum.find(format_double(borda_mean)) != std::string::npos);
}

TEST_CASE("dimsweep_slope fits means against log2 d") {
  std::vector<TrialRecord> recs;
  for (std::size_t d : {4, 8, 16}) {
    for (std::size_t t = 0; t < 3; ++t) {
      TrialRecord r;
      r.method = "uniform";
      r.dim = d;
      r.m = 100;
      r.trial = t;
      r.value = 0.01 * std::log2(double(d)) + 0.001 * double(t);  // same offset per d
      recs.push_back(r);
    }
  }
  CHECK(dimsweep_slope(recs) == doctest::Approx(0.01));
  std::vector<TrialRecord> single(recs.begin(), recs.begin() + 3);
  CHECK_THROWS(dimsweep_slope(single));  // one dimension has no slope
}
