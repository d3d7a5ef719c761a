#include "coremed/embed.hpp"

#include <cmath>

namespace coremed {

PointSet kendall_embed(const RankingSet& rs) {
  detail::require(rs.d >= 2, "kendall_embed: need at least two items");
  const std::size_t d = rs.d;
  const std::size_t dd = d * (d - 1) / 2;
  PointSet out = PointSet::zeros(rs.n, dd);
  out.weights = rs.weights;
  for (std::size_t r = 0; r < rs.n; ++r) {
    const auto row = rs.row(r);
    std::size_t k = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        out.xs[r * dd + k++] = row[i] < row[j] ? 1.0 : 0.0;
  }
  return out;
}

PointSet footrule_embed(const RankingSet& rs) {
  PointSet out = PointSet::zeros(rs.n, rs.d);
  out.weights = rs.weights;
  for (std::size_t r = 0; r < rs.n; ++r) {
    const auto row = rs.row(r);
    for (std::size_t i = 0; i < rs.d; ++i)
      out.xs[r * rs.d + i] = static_cast<double>(row[i]);
  }
  return out;
}

double footrule_dist(const RankingSet& a, std::size_t i, const RankingSet& b,
                     std::size_t j) {
  detail::require(a.d == b.d, "footrule_dist: dimension mismatch");
  const auto ra = a.row(i);
  const auto rb = b.row(j);
  double s = 0.0;
  for (std::size_t k = 0; k < a.d; ++k)
    s += std::abs(static_cast<double>(ra[k]) - static_cast<double>(rb[k]));
  return s;
}

DistortionAdjust adjust_params_for_distortion(double eps, double eta, double D) {
  detail::require(D >= 1.0, "adjust_params_for_distortion: D >= 1");
  detail::require(eps > 0.0 && eta > 0.0, "adjust_params_for_distortion: positive slack");
  DistortionAdjust out;
  out.eps = (1.0 + eps) / (D * D) - 1.0;
  out.eta = D * D * (1.0 + eta) - 1.0;
  out.feasible = out.eps > 0.0;
  return out;
}

TransferReport embedded_stable_check(const RankingSet& P, const RankingSet& Q,
                                     const RankingSet& pool, double eps, double eta) {
  TransferReport tr;
  tr.native = check_stable(Metric::KendallTau, P, Q, pool, eps, eta);
  tr.embedded = check_stable(Metric::L1, kendall_embed(P), kendall_embed(Q),
                             kendall_embed(pool), eps, eta);
  return tr;
}

TransferReport embedded_stable_check(const PointSet& P, const PointSet& Q,
                                     const PointSet& pool, double eps, double eta) {
  // Hamming and L1 agree on 0/1 vectors only.
  for (const PointSet* s : {&P, &Q, &pool})
    for (double v : s->xs)
      detail::require(v == 0.0 || v == 1.0, "embedded_stable_check: 0/1 data only");
  TransferReport tr;
  tr.native = check_stable(Metric::Hamming, P, Q, pool, eps, eta);
  tr.embedded = check_stable(Metric::L1, P, Q, pool, eps, eta);
  return tr;
}

}  // namespace coremed
