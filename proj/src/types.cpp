#include "coremed/types.hpp"

#include <algorithm>
#include <numeric>

namespace coremed {

Metric metric_from_string(std::string_view name) {
  if (name == "l1") return Metric::L1;
  if (name == "l2") return Metric::L2;
  if (name == "hamming") return Metric::Hamming;
  if (name == "kendall") return Metric::KendallTau;
  if (name == "jaccard") return Metric::Jaccard;
  throw std::invalid_argument("unknown metric: " + std::string(name));
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::L1: return "l1";
    case Metric::L2: return "l2";
    case Metric::Hamming: return "hamming";
    case Metric::KendallTau: return "kendall";
    case Metric::Jaccard: return "jaccard";
  }
  return "?";
}

double PointSet::total_weight() const {
  if (weights.empty()) return static_cast<double>(n);
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double RankingSet::total_weight() const {
  if (weights.empty()) return static_cast<double>(n);
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double SetFamily::total_weight() const {
  if (weights.empty()) return static_cast<double>(n);
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

namespace {

template <class C>
C materialize_rows(const C& parent, const Coreset& cs) {
  detail::require(cs.indices.size() == cs.weights.size(),
                  "materialize: index/weight size mismatch");
  C out;
  out.n = cs.indices.size();
  out.d = parent.d;
  if constexpr (requires { out.words; }) {
    out.words = parent.words;
  }
  out.weights = cs.weights;
  for (std::size_t idx : cs.indices) {
    detail::require(idx < parent.n, "materialize: index out of range");
    auto r = parent.row(idx);
    if constexpr (requires { out.xs; }) {
      out.xs.insert(out.xs.end(), r.begin(), r.end());
    } else if constexpr (requires { out.ranks; }) {
      out.ranks.insert(out.ranks.end(), r.begin(), r.end());
    } else {
      out.bits.insert(out.bits.end(), r.begin(), r.end());
    }
  }
  return out;
}

template <class C>
void append_rows_impl(C& pool, const C& extra) {
  detail::require(pool.weights.empty() && extra.weights.empty(),
                  "append_rows: pools are unweighted");
  if (pool.n == 0) {
    pool = extra;
    return;
  }
  detail::require(pool.d == extra.d, "append_rows: dimension mismatch");
  if constexpr (requires { pool.xs; }) {
    pool.xs.insert(pool.xs.end(), extra.xs.begin(), extra.xs.end());
  } else if constexpr (requires { pool.ranks; }) {
    pool.ranks.insert(pool.ranks.end(), extra.ranks.begin(), extra.ranks.end());
  } else {
    detail::require(pool.words == extra.words, "append_rows: word count mismatch");
    pool.bits.insert(pool.bits.end(), extra.bits.begin(), extra.bits.end());
  }
  pool.n += extra.n;
}

}  // namespace

PointSet materialize(const PointSet& parent, const Coreset& cs) {
  return materialize_rows(parent, cs);
}
RankingSet materialize(const RankingSet& parent, const Coreset& cs) {
  return materialize_rows(parent, cs);
}
SetFamily materialize(const SetFamily& parent, const Coreset& cs) {
  return materialize_rows(parent, cs);
}

void append_rows(PointSet& pool, const PointSet& extra) { append_rows_impl(pool, extra); }
void append_rows(RankingSet& pool, const RankingSet& extra) { append_rows_impl(pool, extra); }
void append_rows(SetFamily& pool, const SetFamily& extra) { append_rows_impl(pool, extra); }

bool is_permutation_row(std::span<const std::int32_t> row) {
  std::vector<bool> seen(row.size(), false);
  for (auto v : row) {
    if (v < 0 || static_cast<std::size_t>(v) >= row.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace coremed
