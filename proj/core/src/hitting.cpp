#include "perc/hitting.hpp"

namespace perc {

HittingProfile hitting_profile(const LocalLaw& law) {
  const mask_t m = masks::count(law.dim);
  const int b = masks::bits(law.dim);
  HittingProfile out;
  out.dim = law.dim;
  out.zeta = law.probs;
  // Sum over subsets, one direction at a time.
  for (int dir = 0; dir < b; ++dir) {
    const mask_t bit = mask_t{1} << dir;
    for (mask_t a = 0; a < m; ++a)
      if (a & bit) out.zeta[a] += out.zeta[a ^ bit];
  }
  out.hit.resize(m);
  const mask_t full = masks::full(law.dim);
  for (mask_t a = 0; a < m; ++a) out.hit[a] = 1.0 - out.zeta[a ^ full];
  return out;
}

double HittingProfile::joint_hit(mask_t a, mask_t b) const {
  if (a & b) throw std::invalid_argument("joint_hit needs disjoint masks");
  const mask_t full = masks::full(dim);
  return 1.0 - zeta[a ^ full] - zeta[b ^ full] + zeta[(a | b) ^ full];
}

}  // namespace perc
