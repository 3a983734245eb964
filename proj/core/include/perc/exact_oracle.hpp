#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "perc/exploration.hpp"
#include "perc/lattice.hpp"
#include "perc/local_law.hpp"

namespace perc {

class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg, double configurations)
      : std::runtime_error(msg), configurations(configurations) {}
  double configurations;
};

struct OracleOptions {
  std::int64_t budget = std::int64_t{1} << 26;  // max enumerated configurations
};

struct ExactResult {
  double value = 0.0;
  std::int64_t configurations = 0;
};

// Exact one-arm probability by enumeration over the per-site supports of the
// relevant sites (B_n for directed, B_{n+1} for the undirected semantics and
// for site percolation), with compensated summation of configuration weights.
// Throws budget_error (naming the configuration count) when the product of
// support sizes exceeds opts.budget.
ExactResult exact_one_arm(const LocalLaw& law, int n, const EdgeSemantics& sem,
                          const OracleOptions& opts = {});

// Exact one-arm probability when sites of U carry law Q and all other
// relevant sites carry law P. Requires site-wise domination hit_P <= hit_Q
// on proper nonempty masks (the comparison hypothesis); throws
// std::invalid_argument otherwise.
ExactResult exact_one_arm_interpolated(const LocalLaw& p, const LocalLaw& q,
                                       const std::vector<Point>& u, int n,
                                       const EdgeSemantics& sem,
                                       const OracleOptions& opts = {});

struct MonotonicityCounterexample {
  std::vector<Point> u;
  Point added;
  double value_before = 0.0;
  double value_after = 0.0;
};

struct MonotonicityResult {
  bool holds = false;
  std::optional<MonotonicityCounterexample> counterexample;
};

// Checks value(U) <= value(U + {a}) + tol for every U subseteq relevant sites
// and a outside U (all single-site upgrades of all subsets).
MonotonicityResult verify_interpolation_monotonicity(const LocalLaw& p, const LocalLaw& q,
                                                     int n, const EdgeSemantics& sem,
                                                     double tol = 1e-12,
                                                     const OracleOptions& opts = {});

enum class PivotalityCase {
  connected_without_a,  // o reaches the boundary even with N(a) = {}
  blocked_even_if_full, // o misses the boundary even with N(a) = full
  pivotal,              // decided by whether N(a) hits the escape set A
};

struct PivotalityResult {
  PivotalityCase kind;
  // For the pivotal case: directions from a whose endpoints reach the
  // boundary without revisiting a (boundary endpoints count as escaped).
  mask_t escape_set = 0;
};

// Classifies a directed configuration on B_n with the mask at `a` left
// unspecified. `config` holds one mask per ball ordinal of BallIndex(d, n);
// the entry at a is ignored.
PivotalityResult classify_pivotality(const BallIndex& ball, const std::vector<mask_t>& config,
                                     const Point& a);

// Exact undirected bond percolation one-arm probability (edges within
// B_{n+1} with at least one endpoint in B_n).
ExactResult exact_bond_one_arm(double p, int dim, int n, const OracleOptions& opts = {});

// Identity checks, each returning (lhs, rhs):
//   directed one-arm at make_iid(d, p)  ==  undirected bond one-arm at p
std::pair<double, double> exact_dir_undir_check(double p, int dim, int n,
                                                const OracleOptions& opts = {});
//   one-arm to radius n+1 at make_aon(d, p)  ==  site-iid one-arm to radius n
std::pair<double, double> exact_aon_site_check(double p, int dim, int n,
                                               const OracleOptions& opts = {});

}  // namespace perc
