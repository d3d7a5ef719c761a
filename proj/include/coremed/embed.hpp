#pragma once

#include "coremed/coreset.hpp"

namespace coremed {

// Rankings as 0/1 vectors with one coordinate per item pair (i < j, lex
// order): coordinate (i,j) is 1 when i is ranked above j. L1 distance in the
// image equals the Kendall tau distance exactly, since a pair contributes 1
// precisely when the two rankings disagree on it.
PointSet kendall_embed(const RankingSet& rs);

// Rankings as their rank vectors over the reals. L1 distance in the image is
// the Spearman footrule distance.
PointSet footrule_embed(const RankingSet& rs);

double footrule_dist(const RankingSet& a, std::size_t i, const RankingSet& b,
                     std::size_t j);

// Parameter transport through a D-distorted embedding (costs stretched by at
// most D^2 end to end): eps' = (1+eps)/D^2 - 1, eta' = D^2 (1+eta) - 1.
// Infeasible when eps' <= 0, i.e. the distortion eats the whole margin.
struct DistortionAdjust {
  bool feasible = false;
  double eps = 0.0;
  double eta = 0.0;
};

DistortionAdjust adjust_params_for_distortion(double eps, double eta, double D);

// Run the stable check natively and again in an isometric embedding of the
// same data; the two reports must agree. Kendall tau goes through
// kendall_embed; Hamming instances embed as themselves (already an L1 space).
struct TransferReport {
  CheckReport native;
  CheckReport embedded;
};

TransferReport embedded_stable_check(const RankingSet& P, const RankingSet& Q,
                                     const RankingSet& pool, double eps, double eta);
TransferReport embedded_stable_check(const PointSet& P, const PointSet& Q,
                                     const PointSet& pool, double eps, double eta);

}  // namespace coremed
