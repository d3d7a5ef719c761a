#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coremed {

namespace detail {
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}
}  // namespace detail

enum class Metric { L1, L2, Hamming, KendallTau, Jaccard };

Metric metric_from_string(std::string_view name);
std::string_view to_string(Metric m);

// Dense real vectors, row major. Covers L1, L2 and Hamming instances.
// `weights` is empty (unit weights) or has one entry per row.
struct PointSet {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> xs;
  std::vector<double> weights;

  static PointSet zeros(std::size_t n, std::size_t d) {
    PointSet p;
    p.n = n;
    p.d = d;
    p.xs.assign(n * d, 0.0);
    return p;
  }

  std::span<const double> row(std::size_t i) const { return {xs.data() + i * d, d}; }
  std::span<double> row(std::size_t i) { return {xs.data() + i * d, d}; }
  double weight(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }
  double total_weight() const;
};

// Rankings, row major. ranks[i*d + item] is the rank of `item` in row i;
// every row is a permutation of 0..d-1 (rank 0 = best).
struct RankingSet {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::int32_t> ranks;
  std::vector<double> weights;

  std::span<const std::int32_t> row(std::size_t i) const {
    return {ranks.data() + i * d, d};
  }
  std::span<std::int32_t> row(std::size_t i) { return {ranks.data() + i * d, d}; }
  double weight(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }
  double total_weight() const;
};

// Subsets of {0..d-1}, bit packed 64 per word, row major.
struct SetFamily {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  std::vector<double> weights;

  static SetFamily empty(std::size_t n, std::size_t d) {
    SetFamily f;
    f.n = n;
    f.d = d;
    f.words = d == 0 ? 1 : (d + 63) / 64;
    f.bits.assign(f.n * f.words, 0);
    return f;
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits.data() + i * words, words};
  }
  std::span<std::uint64_t> row(std::size_t i) { return {bits.data() + i * words, words}; }
  bool test(std::size_t i, std::size_t e) const {
    return (bits[i * words + e / 64] >> (e % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t e) { bits[i * words + e / 64] |= 1ULL << (e % 64); }
  double weight(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }
  double total_weight() const;
};

struct InstanceStats {
  double diameter = 0.0;
  double avg_pairwise = 0.0;  // over all ordered pairs, self pairs included
  double dispersion_c = 1.0;  // diameter / avg_pairwise, 1 for the all-equal case
};

// 1-median coreset: row indices into a parent instance plus importance
// weights, together with how it was built.
struct Coreset {
  std::vector<std::size_t> indices;
  std::vector<double> weights;
  std::string method;
  std::uint64_t seed = 0;
  std::uint64_t parent_hash = 0;

  std::size_t size() const { return indices.size(); }
};

// Copy the selected rows into a standalone weighted instance.
PointSet materialize(const PointSet& parent, const Coreset& cs);
RankingSet materialize(const RankingSet& parent, const Coreset& cs);
SetFamily materialize(const SetFamily& parent, const Coreset& cs);

// Append the rows of `extra` to `pool`. Both must be unweighted.
void append_rows(PointSet& pool, const PointSet& extra);
void append_rows(RankingSet& pool, const RankingSet& extra);
void append_rows(SetFamily& pool, const SetFamily& extra);

bool is_permutation_row(std::span<const std::int32_t> row);

}  // namespace coremed
