#pragma once

#include <vector>

#include "perc/local_law.hpp"

namespace perc {

// hit[A] = P[N(o) intersects A], zeta[B] = P[N(o) subseteq B]. Computed for
// all masks at once with a subset-sum (zeta) transform, O(2^(2d) * 2d);
// hit[A] = 1 - zeta[~A].
struct HittingProfile {
  int dim;
  std::vector<double> hit;
  std::vector<double> zeta;

  double operator[](mask_t a) const { return hit[a]; }

  // P[N(o) intersects A and N(o) intersects B] for disjoint A, B, by
  // inclusion-exclusion: 1 - zeta[~A] - zeta[~B] + zeta[~(A|B)].
  double joint_hit(mask_t a, mask_t b) const;
};

HittingProfile hitting_profile(const LocalLaw& law);

}  // namespace perc
