#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coremed/coreset.hpp"
#include "coremed/rng.hpp"

using namespace coremed;

namespace {

PointSet points1d(std::vector<double> vals, std::vector<double> w = {}) {
  PointSet p;
  p.n = vals.size();
  p.d = 1;
  p.xs = std::move(vals);
  p.weights = std::move(w);
  return p;
}

}  // namespace

TEST_CASE("sample size formulas at frozen values") {
  CHECK(uniform_sample_size(0.2, 20, 0.1) == 300);
  CHECK(uniform_sample_size(0.2, 16, 0.2) == 254);
  CHECK(uniform_sample_size(0.1, 20, 0.1) == 1199);
  CHECK(uniform_sample_size_raw(0.2, 20, 0.1) == doctest::Approx(299.5732273554));
  CHECK(finite_space_sample_size(0.5, 0.1, 1000) == 4127);
  CHECK(dispersed_sample_size(0.2, 2.0, 16) == 694);
}

TEST_CASE("halving eps quadruples the size, up to ceiling") {
  const double a = uniform_sample_size_raw(0.2, 20, 0.1);
  const double b = uniform_sample_size_raw(0.1, 20, 0.1);
  CHECK(b / a == doctest::Approx(4.0));
  const double c = uniform_sample_size_raw(0.2, 20, 0.1, 4.0);
  CHECK(c / a == doctest::Approx(2.0));  // K scales linearly
}

TEST_CASE("sample size argument validation") {
  CHECK_THROWS(uniform_sample_size(0.0, 20, 0.1));
  CHECK_THROWS(uniform_sample_size(0.2, 0, 0.1));
  CHECK_THROWS(uniform_sample_size(0.2, 20, 1.0));
  CHECK_THROWS(finite_space_sample_size(0.2, 0.1, 0));
  CHECK_THROWS(dispersed_sample_size(0.2, 0.5, 16));  // C < 1
}

TEST_CASE("uniform_sample carries weight n/m and valid indices") {
  PointSet p = points1d({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  Coreset cs = uniform_sample(p, 4, 99);
  CHECK(cs.size() == 4);
  CHECK(cs.method == "uniform");
  CHECK(cs.seed == 99);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(cs.indices[k] < p.n);
    CHECK(cs.weights[k] == doctest::Approx(10.0 / 4.0));
  }
  Coreset one = uniform_sample(p, 1, 7);
  CHECK(one.weights[0] == doctest::Approx(10.0));
}

TEST_CASE("uniform_sample is seed deterministic") {
  PointSet p = points1d({0, 1, 2, 3, 4, 5, 6, 7});
  Coreset a = uniform_sample(p, 5, 42);
  Coreset b = uniform_sample(p, 5, 42);
  Coreset c = uniform_sample(p, 5, 43);
  CHECK(a.indices == b.indices);
  CHECK(a.weights == b.weights);
  CHECK(a.indices != c.indices);
}

TEST_CASE("uniform_sample hits every row at the right rate") {
  PointSet p = points1d({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  std::vector<int> hits(10, 0);
  const std::size_t m = 200, reps = 500;
  for (std::size_t r = 0; r < reps; ++r) {
    Coreset cs = uniform_sample(p, m, 1000 + r);
    for (auto i : cs.indices) ++hits[i];
  }
  const double draws = double(m * reps);
  for (int k = 0; k < 10; ++k) CHECK(std::abs(hits[k] / draws - 0.1) < 0.01);
}

TEST_CASE("uniform_sample on a weighted parent draws by weight") {
  PointSet p = points1d({0, 1}, {1.0, 9.0});
  std::size_t hits1 = 0, total = 0;
  for (std::size_t r = 0; r < 300; ++r) {
    Coreset cs = uniform_sample(p, 100, 50 + r);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      hits1 += (cs.indices[k] == 1);
      ++total;
      CHECK(cs.weights[k] == doctest::Approx(10.0 / 100.0));  // W/m
    }
  }
  CHECK(std::abs(hits1 / double(total) - 0.9) < 0.01);
}

TEST_CASE("uniform_sample works for rankings and sets") {
  RankingSet rs;
  rs.n = 3;
  rs.d = 3;
  rs.ranks = {0, 1, 2, 1, 0, 2, 2, 1, 0};
  Coreset cr = uniform_sample(rs, 5, 3);
  CHECK(cr.size() == 5);
  for (auto i : cr.indices) CHECK(i < 3);
  SetFamily sf = SetFamily::empty(4, 10);
  Coreset cf = uniform_sample(sf, 2, 3);
  CHECK(cf.weights[0] == doctest::Approx(2.0));
}

TEST_CASE("sensitivity weights follow the mixed importance rule") {
  // 99 points at the median and one at distance 1000: q = 0.505 for the
  // outlier, 0.005 for the rest
  std::vector<double> vals(100, 0.0);
  vals[99] = 1000.0;
  PointSet p = points1d(std::move(vals));
  const std::size_t m = 50;
  Coreset cs = sensitivity_sample(Metric::L1, p, m, 7);
  CHECK(cs.method == "sensitivity1");
  CHECK(cs.size() == m);
  bool saw_outlier = false, saw_normal = false;
  for (std::size_t k = 0; k < m; ++k) {
    if (cs.indices[k] == 99) {
      saw_outlier = true;
      CHECK(cs.weights[k] == doctest::Approx(1.0 / (m * 0.505)));
    } else {
      saw_normal = true;
      CHECK(cs.weights[k] == doctest::Approx(1.0 / (m * 0.005)));
    }
  }
  CHECK(saw_outlier);  // q > 1/2 makes missing it astronomically unlikely
  CHECK(saw_normal);
}

TEST_CASE("sensitivity sampling is unbiased on total weight") {
  std::vector<double> vals(100, 0.0);
  vals[99] = 1000.0;
  PointSet p = points1d(std::move(vals));
  double acc = 0.0;
  const std::size_t reps = 400;
  for (std::size_t r = 0; r < reps; ++r) {
    Coreset cs = sensitivity_sample(Metric::L1, p, 40, 100 + r);
    for (auto w : cs.weights) acc += w;
  }
  CHECK(acc / reps == doctest::Approx(100.0).epsilon(0.05));
}

TEST_CASE("sensitivity degrades to uniform when every point is the median") {
  PointSet p = points1d({5, 5, 5, 5});
  Coreset cs = sensitivity_sample(Metric::L1, p, 3, 11);
  for (auto w : cs.weights) CHECK(w == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("two-round sensitivity composes indices into the parent") {
  PointSet p = points1d({0, 1, 2, 3, 4, 5, 6, 7, 100});
  Coreset cs = sensitivity_sample(Metric::L2, p, 6, 13, 2);
  CHECK(cs.method == "sensitivity2");
  CHECK(cs.size() == 6);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    CHECK(cs.indices[k] < p.n);
    CHECK(cs.weights[k] > 0.0);
  }
}

TEST_CASE("sensitivity_sample rejects non point metrics") {
  PointSet p = points1d({0, 1});
  CHECK_THROWS(sensitivity_sample(Metric::Hamming, p, 2, 1));
  CHECK_THROWS(sensitivity_sample(Metric::L1, p, 2, 1, 3));
}

TEST_CASE("pool sources") {
  Rng rng(5);
  PointSet p = PointSet::zeros(40, 2);
  for (auto& v : p.xs) v = rng.uniform(-1.0, 4.0);

  PoolSpec data{PoolSource::DataRows, 10, 1, 0.5};
  PointSet dp = make_pool(Metric::L1, p, data);
  CHECK(dp.n == 10);
  for (std::size_t i = 0; i < dp.n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < p.n; ++j)
      found |= std::equal(dp.row(i).begin(), dp.row(i).end(), p.row(j).begin());
    CHECK(found);
  }

  PoolSpec med{PoolSource::PerturbedMedian, 6, 2, 0.5};
  PointSet mp = make_pool(Metric::L1, p, med);
  CHECK(mp.n == 6);
  const auto m0 = l1_median(p);
  CHECK(std::equal(mp.row(0).begin(), mp.row(0).end(), m0.begin()));

  PointSet hp = make_pool(Metric::Hamming, p, med);
  const auto h0 = hamming_median(p);
  CHECK(std::equal(hp.row(0).begin(), hp.row(0).end(), h0.begin()));

  PoolSpec box{PoolSource::RandomBox, 30, 3, 0.5};
  PointSet bp = make_pool(Metric::L1, p, box);
  for (std::size_t i = 0; i < bp.n; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      double lo = p.xs[j], hi = p.xs[j];
      for (std::size_t r = 0; r < p.n; ++r) {
        lo = std::min(lo, p.row(r)[j]);
        hi = std::max(hi, p.row(r)[j]);
      }
      CHECK(bp.row(i)[j] >= lo);
      CHECK(bp.row(i)[j] <= hi);
    }

  PoolSpec grid{PoolSource::Grid, 9, 4, 0.5};
  PointSet gp = make_pool(Metric::L1, p, grid);
  CHECK(gp.n == 9);
  PointSet p3 = PointSet::zeros(5, 3);
  CHECK_THROWS(make_pool(Metric::L1, p3, grid));
}

TEST_CASE("grid pool covers a 1-d range evenly") {
  PointSet p = points1d({0.0, 10.0});
  PoolSpec grid{PoolSource::Grid, 11, 1, 0.5};
  PointSet gp = make_pool(Metric::L1, p, grid);
  REQUIRE(gp.n == 11);
  std::vector<double> got(gp.xs);
  std::sort(got.begin(), got.end());
  for (int i = 0; i <= 10; ++i) CHECK(got[i] == doctest::Approx(double(i)));
}

TEST_CASE("ranking pools are permutations with the median up front") {
  RankingSet rs;
  rs.n = 6;
  rs.d = 4;
  rs.ranks = {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 3, 2, 1, 0, 2, 3, 0, 1, 2, 3, 0, 2, 1, 3};
  PoolSpec med{PoolSource::PerturbedMedian, 8, 9, 0.5};
  RankingSet pool = make_pool(Metric::KendallTau, rs, med);
  CHECK(pool.n == 8);
  for (std::size_t i = 0; i < pool.n; ++i) CHECK(is_permutation_row(pool.row(i)));
  auto [exact, c] = exact_median(Metric::KendallTau, rs);
  CHECK(std::equal(pool.row(0).begin(), pool.row(0).end(), exact.row(0).begin()));

  PoolSpec grid{PoolSource::Grid, 4, 9, 0.5};
  CHECK_THROWS(make_pool(Metric::KendallTau, rs, grid));
}

TEST_CASE("set pools put the enumerated median in row 0") {
  SetFamily sf = SetFamily::empty(5, 3);
  sf.set(0, 0);
  sf.set(1, 0);
  sf.set(2, 0);
  sf.set(2, 1);
  sf.set(3, 2);
  PoolSpec med{PoolSource::PerturbedMedian, 4, 9, 0.5};
  SetFamily pool = make_pool(Metric::Jaccard, sf, med);
  auto [exact, c] = exact_median(Metric::Jaccard, sf);
  CHECK(pool.n == 4);
  for (std::size_t e = 0; e < 3; ++e) CHECK(pool.test(0, e) == exact.test(0, e));
}

TEST_CASE("threshold_discrepancy frozen examples") {
  PointSet p = points1d({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  PointSet even = points1d({2, 4, 6, 8, 10});
  PointSet low = points1d({1, 2, 3, 4, 5});
  CHECK(threshold_discrepancy(p, even) == doctest::Approx(0.1));
  CHECK(threshold_discrepancy(p, low) == doctest::Approx(0.5));
  CHECK(threshold_discrepancy(p, p) == doctest::Approx(0.0));

  // duplicating the sub multiset does not change its empirical CDF
  PointSet dup = points1d({2, 2, 4, 4, 6, 6, 8, 8, 10, 10});
  CHECK(threshold_discrepancy(p, dup) == doctest::Approx(0.1));
}

TEST_CASE("threshold_discrepancy scans every coordinate") {
  PointSet p = PointSet::zeros(4, 2);
  p.xs = {0, 0, 1, 0, 2, 0, 3, 0};  // second coordinate constant
  PointSet q = PointSet::zeros(2, 2);
  q.xs = {0, 0, 1, 0};
  // coordinate 0: F_Q jumps to 1 at value 1 while F_P is at 0.5
  CHECK(threshold_discrepancy(p, q) == doctest::Approx(0.5));
}

TEST_CASE("check_strong measures the worst pool deviation") {
  PointSet p = points1d({0, 2});
  PointSet q = points1d({0}, {2.0});
  PointSet pool = points1d({0, 1, 2, 5});
  CheckReport r = check_strong(Metric::L1, p, q, pool, 0.5);
  CHECK(r.property == "strong");
  CHECK(!r.passed);
  CHECK(r.measured == doctest::Approx(1.0));
  CHECK(r.witness_a == 0);
  CheckReport ok = check_strong(Metric::L1, p, q, pool, 1.05);
  CHECK(ok.passed);
}

TEST_CASE("check_strong zero cost rule") {
  PointSet p = points1d({0, 0});
  PointSet pool = points1d({0});
  CheckReport good = check_strong(Metric::L1, p, points1d({0}, {2.0}), pool, 0.1);
  CHECK(good.passed);
  CHECK(good.measured == 0.0);
  CheckReport bad = check_strong(Metric::L1, p, points1d({1}, {2.0}), pool, 0.1);
  CHECK(!bad.passed);
  CHECK(std::isinf(bad.measured));
  CHECK(bad.witness_a == 0);
}

TEST_CASE("check_stable fires only on near optimal pairs") {
  PointSet p = points1d({0, 0, 0, 100});
  PointSet pool = points1d({0, 100});
  PointSet good = points1d({0}, {4.0});
  CheckReport g = check_stable(Metric::L1, p, good, pool, 0.2, 0.5);
  CHECK(g.passed);
  CHECK(g.measured <= 0.0);

  PointSet bad = points1d({100}, {4.0});
  CheckReport b = check_stable(Metric::L1, p, bad, pool, 0.2, 1.9);
  CHECK(!b.passed);
  CHECK(b.measured == doctest::Approx(2.0));
  CHECK(b.witness_a == 1);  // the outlier center looks optimal on Q
  CHECK(b.witness_b == 0);
  CheckReport b2 = check_stable(Metric::L1, p, bad, pool, 0.2, 2.0);
  CHECK(b2.passed);
}

TEST_CASE("check_weak compares firing centers to opt(P)") {
  PointSet p = points1d({0, 0, 0, 100});
  PointSet pool = points1d({0, 100, 50});
  PointSet bad = points1d({100}, {4.0});
  CheckReport b = check_weak(Metric::L1, p, bad, pool, 0.2, 1.0);
  CHECK(b.property == "weak");
  CHECK(!b.passed);
  CHECK(b.measured == doctest::Approx(2.0));
  CheckReport b2 = check_weak(Metric::L1, p, bad, pool, 0.2, 2.05);
  CHECK(b2.passed);

  PointSet good = points1d({0}, {4.0});
  CheckReport g = check_weak(Metric::L1, p, good, pool, 0.2, 0.3);
  CHECK(g.passed);
  CHECK(g.measured == doctest::Approx(0.0));
}

TEST_CASE("centered_drift hand example") {
  PointSet p = points1d({0, 2});
  PointSet pool = points1d({0, 2, 10});
  PointSet q = points1d({2}, {2.0});
  CheckReport r = centered_drift(Metric::L1, p, q, pool);
  CHECK(r.property == "rcda");
  CHECK(r.measured == doctest::Approx(2.0));
  CHECK(r.witness_a == 1);

  // supplying a different anchor changes which rows look bad
  PointSet mu = points1d({10});
  CheckReport r2 = centered_drift(Metric::L1, p, q, pool, &mu);
  CHECK(r2.measured == doctest::Approx(2.0));
  CHECK(r2.witness_a == 0);

  CheckReport same = centered_drift(Metric::L1, p, points1d({0, 2}), pool);
  CHECK(same.measured == doctest::Approx(0.0));

  CheckReport gated = centered_drift(Metric::L1, p, q, pool, nullptr, 0.1);
  CHECK(!gated.passed);
  CHECK(gated.eps == doctest::Approx(0.1));
}

TEST_CASE("centered_drift skips degenerate pool rows and rejects all-degenerate pools") {
  PointSet p = points1d({0, 0});
  PointSet q = points1d({0}, {2.0});
  PointSet mixed = points1d({0, 3});
  CheckReport r = centered_drift(Metric::L1, p, q, mixed);
  CHECK(r.measured == doctest::Approx(0.0));
  PointSet degenerate = points1d({0});
  CHECK_THROWS(centered_drift(Metric::L1, p, q, degenerate));
}

TEST_CASE("framework implication holds on sampled coresets") {
  Rng rng(17);
  PointSet p = PointSet::zeros(800, 4);
  for (auto& v : p.xs) v = rng.normal();
  PoolSpec spec{PoolSource::PerturbedMedian, 40, 23, 0.5};
  PointSet pool = make_pool(Metric::L1, p, spec);
  int held = 0;
  for (int t = 0; t < 10; ++t) {
    Coreset cs = uniform_sample(p, 300, 500 + t);
    PointSet q = materialize(p, cs);
    FrameworkReport fr = framework_implication(Metric::L1, p, q, pool, 0.2);
    CHECK(fr.c >= 1.0);
    CHECK(fr.implication == (!fr.premise || fr.conclusion));
    held += fr.implication;
  }
  CHECK(held == 10);  // the theorem is not allowed to fail, whatever fires
}

TEST_CASE("framework eps cap") {
  PointSet p = points1d({0, 1});
  PointSet pool = points1d({0, 1});
  PointSet q = points1d({0}, {2.0});
  CHECK_THROWS(framework_implication(Metric::L1, p, q, pool, 0.25));
  CHECK_NOTHROW(framework_implication(Metric::L1, p, q, pool, 0.2));
}
