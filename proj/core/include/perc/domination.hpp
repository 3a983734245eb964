#pragma once

#include <optional>
#include <vector>

#include "perc/hitting.hpp"
#include "perc/local_law.hpp"

namespace perc {

enum class ComparisonMode { weak, strict };

// Which masks a site-wise comparison quantifies over. The one-arm comparison
// hypothesis quantifies over proper nonempty subsets only; the exchangeable
// sandwich holds for every subset.
enum class MaskRange { proper_nonempty, all };

struct Violation {
  mask_t mask;
  double lhs;
  double rhs;
};

struct DominationReport {
  bool holds = false;
  bool strict = false;
  std::vector<Violation> violations;
  std::vector<mask_t> equalities;  // masks with |lhs - rhs| <= tol (weak mode)
};

// Site-wise criterion: hit_P[A] <= hit_Q[A] for each A in range (strictly,
// in strict mode, for proper nonempty A). Inequalities use tolerance `tol`:
// weak passes when lhs <= rhs + tol, strict when lhs < rhs - tol.
DominationReport check_local_domination(const LocalLaw& p, const LocalLaw& q,
                                        ComparisonMode mode = ComparisonMode::weak,
                                        double tol = 1e-9,
                                        MaskRange range = MaskRange::proper_nonempty);

struct PairViolation {
  mask_t a;
  mask_t b;
  double lhs;
  double rhs;
};

struct PairwiseReport {
  bool holds = false;
  std::vector<PairViolation> violations;
};

// Bidirectional pair condition: for all disjoint nonempty A, B,
//   P[N hits A] * P[N hits B] <= Q[N hits A and N hits B].
PairwiseReport check_pairwise_domination(const LocalLaw& p, const LocalLaw& q,
                                         double tol = 1e-9);

struct StochasticResult {
  bool dominated = false;
  // When dominated is false: an up-closed family U of masks with
  // P[N in U] > Q[N in U], plus the two masses.
  std::vector<mask_t> witness_upset;
  double p_mass = 0.0;
  double q_mass = 0.0;
};

// Strassen test for P <=_st Q (up-set mass comparison) via max-flow on the
// containment bipartite graph between the two supports. d <= 3.
StochasticResult check_stochastic_domination(const LocalLaw& p, const LocalLaw& q);

// One mass-moving step: pick the outermost support pair (n-, n+) with
// n+ - n- >= 2 and move mass inward preserving the mean; at least one of the
// two endpoints is zeroed. Returns nullopt when the range is already <= 1.
std::optional<DegreeDistribution> exchangeable_reduce_step(const DegreeDistribution& dd);

// Iterate steps until the range is <= 1; lands on the (k, eps) pair with
// k = floor(mean), eps = mean - k.
DegreeDistribution exchangeable_reduce(const DegreeDistribution& dd);

// f(n, l) = 1 - C(2d-n, l) / C(2d, l) is concave in n on {0..2d} for every l;
// checked exactly in integer arithmetic via cross-multiplied second
// differences.
bool f_concavity_check(int dim);

// Discrete convexity of n -> C(n, l) on {0..2d}: C(n+1,l) + C(n-1,l) >= 2 C(n,l).
bool binomial_convexity_check(int dim);

}  // namespace perc
