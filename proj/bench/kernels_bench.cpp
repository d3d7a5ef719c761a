#include <benchmark/benchmark.h>

#include "coremed/coreset.hpp"
#include "coremed/harness.hpp"
#include "coremed/kernels.hpp"

namespace {

using namespace coremed;

const PointSet& bench_points() {
  static const PointSet ps = gen_gauss_mix(20000, 16, 3, 0.0, 7);
  return ps;
}

const PointSet& bench_pool() {
  static const PointSet pool = [] {
    PoolSpec spec;
    spec.source = PoolSource::RandomBox;
    spec.count = 256;
    spec.seed = 11;
    return make_pool(Metric::L1, bench_points(), spec);
  }();
  return pool;
}

void bm_pool_costs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pool_costs(Metric::L1, bench_pool(), bench_points()));
}
BENCHMARK(bm_pool_costs)->Unit(benchmark::kMillisecond);

void bm_pool_costs_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::pool_costs(Metric::L1, bench_pool(), bench_points()));
}
BENCHMARK(bm_pool_costs_serial)->Unit(benchmark::kMillisecond);

const PointSet& pairwise_points() {
  static const PointSet ps = gen_gauss_mix(4000, 16, 3, 0.0, 7);
  return ps;
}

void bm_pairwise_stats(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(pairwise_stats(Metric::L1, pairwise_points()));
}
BENCHMARK(bm_pairwise_stats)->Unit(benchmark::kMillisecond);

void bm_pairwise_stats_serial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::pairwise_stats(Metric::L1, pairwise_points()));
}
BENCHMARK(bm_pairwise_stats_serial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
