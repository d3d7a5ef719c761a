#pragma once

#include "coremed/types.hpp"

namespace coremed {

// Axis threshold classifiers x -> [x[i] <= r] over d coordinates.

// True when the class realizes all 2^n labelings of the given points. The
// candidate thresholds per coordinate are each point value, the midpoints of
// consecutive distinct values and a sentinel below the minimum; that set is
// exhaustive because labelings are constant between breakpoints. n <= 20.
bool shatters(const PointSet& pts);

// Largest m such that some m-subset of the candidates is shattered.
// Exhaustive over subsets, so the candidate count is capped at 12.
std::size_t vcdim_bruteforce(const PointSet& candidates);

// log2(d) points in dimension d (a power of two) that the class shatters:
// coordinates are indexed by the m-bit patterns v (most significant bit
// first) and point i has value 1 - bit_i(v), so the threshold at coordinate v
// with r = 1/2 realizes exactly the labeling v.
PointSet shattering_construction(std::size_t d);

}  // namespace coremed
