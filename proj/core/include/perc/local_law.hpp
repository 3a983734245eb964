#pragma once

#include <vector>

#include "perc/masks.hpp"

namespace perc {

// Probability measure on subsets of the 2d neighbor directions, stored as a
// dense vector indexed by mask. probs must be nonnegative and sum to 1
// (checked to 1e-12 with compensated summation).
struct LocalLaw {
  int dim;
  std::vector<double> probs;

  LocalLaw(int dim, std::vector<double> probs);

  double operator[](mask_t a) const { return probs[a]; }
  mask_t mask_count() const { return masks::count(dim); }
};

// Distribution of |N(o)| for an exchangeable law: alphas[n] = P[|N(o)| = n],
// n = 0..2d.
struct DegreeDistribution {
  int dim;
  std::vector<double> alphas;

  DegreeDistribution(int dim, std::vector<double> alphas);

  double mean() const;
  // Range statistic R = max support - min support; 0 for a point mass.
  int range() const;
  int min_support() const;
  int max_support() const;
};

// Each direction subset drawn independently: P[A] = p^|A| (1-p)^(2d-|A|).
LocalLaw make_iid(int dim, double p);

// "Drunken NewGuy": k = floor(2dp), eps = 2dp - k; picks a uniform k-subset
// with probability 1-eps, a uniform (k+1)-subset with probability eps.
// Expected degree is exactly 2dp; p = 1 gives the full mask.
LocalLaw make_dng(int dim, double p);

// All-or-nothing: full mask with probability p, empty otherwise.
LocalLaw make_aon(int dim, double p);

// Uniform over subsets of each size n, weighted by alphas[n].
LocalLaw make_exchangeable(const DegreeDistribution& dd);

// d=2 law on the four corner pairs {+-x, +-y} (weight alpha each) and the two
// sticks {+x,-x}, {+y,-y} (weight beta each), 4*alpha + 2*beta = 1.
// Requires 0 <= alpha <= 1/4.
LocalLaw make_corner_stick(double alpha);

// d=2: singletons with weight (1-eps)/4, the two sticks with weight eps/2.
LocalLaw make_soft_opposite(double eps);

// d=2: singletons with weight (1-eps)/4, the four corners with weight eps/4.
LocalLaw make_soft_perpendicular(double eps);

// p*Q + (1-p)*delta_empty.
LocalLaw mix_with_empty(const LocalLaw& q, double p);

double expected_degree(const LocalLaw& law);

// Degree distribution induced by the law (exact regardless of exchangeability).
DegreeDistribution degree_distribution(const LocalLaw& law);

struct ExchangeabilityResult {
  bool exchangeable;
  // Two equal-size masks with differing probability when not exchangeable.
  mask_t witness_a = 0;
  mask_t witness_b = 0;
};

ExchangeabilityResult is_exchangeable(const LocalLaw& law, double tol = 1e-12);

}  // namespace perc
