#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "perc/domination.hpp"
#include "perc/local_law.hpp"

namespace perc {

using rational = mpq_class;

// Accepts "3/4", "0.347297" (exact decimal), or an integer literal.
rational parse_rational(const std::string& text);

// Exact-arithmetic twin of LocalLaw for verdicts that must carry no floating
// tolerance. Dense over masks, so capped at d <= 3.
inline constexpr int kMaxExactDim = 3;

struct RationalLaw {
  int dim;
  std::vector<rational> probs;

  RationalLaw(int dim, std::vector<rational> probs);

  LocalLaw to_double() const;
};

RationalLaw make_iid_exact(int dim, const rational& p);
RationalLaw make_dng_exact(int dim, const rational& p);
RationalLaw make_aon_exact(int dim, const rational& p);
RationalLaw make_corner_stick_exact(const rational& alpha);

std::vector<rational> hitting_profile_exact(const RationalLaw& law);

// Same contract as check_local_domination but verdicts are exact; the stored
// lhs/rhs values are double approximations for reporting only.
DominationReport check_local_domination_exact(const RationalLaw& p, const RationalLaw& q,
                                              ComparisonMode mode = ComparisonMode::weak,
                                              MaskRange range = MaskRange::proper_nonempty);

PairwiseReport check_pairwise_domination_exact(const RationalLaw& p, const RationalLaw& q);

StochasticResult check_stochastic_domination_exact(const RationalLaw& p,
                                                   const RationalLaw& q);

}  // namespace perc
