#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perc/exploration.hpp"

namespace perc {

struct Estimate {
  std::string model;
  int dim = 0;
  int n = 0;
  std::string semantics;
  double p_hat = 0.0;
  double stderr_ = 0.0;
  double ci_low = 0.0;  // Wilson score interval at 95%
  double ci_high = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;

  std::string csv_row() const;  // matches csv_header(); ends with the version
  static std::string csv_header();
};

// One-arm probability estimator: samples explorations keyed by
// (seed, sample index), so the estimate is identical for any worker count.
Estimate estimate_one_arm(const LocalLaw& law, int n, const EdgeSemantics& sem,
                          std::int64_t samples, std::uint64_t seed, int workers = 0,
                          const std::string& model = "");

// Independent bond percolation counterpart.
Estimate estimate_one_arm_bond(double p, int dim, int n, std::int64_t samples,
                               std::uint64_t seed, int workers = 0);

// One-parameter family of laws, e.g. p -> make_dng(d, p).
struct LawFamily {
  std::string name;
  int dim = 0;
  double param_lo = 0.0;
  double param_hi = 1.0;
  std::function<LocalLaw(double)> build;
};

// Estimates along a parameter grid. Fresh seeds per grid point by default
// (seed mixed with the point index); common_random_numbers reuses the same
// seed everywhere, coupling the curves.
std::vector<Estimate> scan_parameter(const LawFamily& family, const std::vector<double>& grid,
                                     int n, const EdgeSemantics& sem, std::int64_t samples,
                                     std::uint64_t seed, int workers = 0,
                                     bool common_random_numbers = false);

struct DecayFit {
  double c_hat = 0.0;  // decay rate: log p_hat(n) ~ intercept - c_hat * n
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<int> radii;          // radii actually used (zero estimates dropped)
  std::vector<double> log_p_hat;
};

class insufficient_data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares fit of log p_hat(n) against n over the given radii; radii
// whose estimate is zero are dropped, at least three usable radii required.
DecayFit fit_decay(const LocalLaw& law, const std::vector<int>& radii,
                   const EdgeSemantics& sem, std::int64_t samples, std::uint64_t seed,
                   int workers = 0);

class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PseudoCriticalOptions {
  double threshold = 0.5;
  double tol = 0.01;        // final bracket width on the parameter
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  int workers = 0;
  bool common_random_numbers = false;  // default: fresh seed per evaluation
  // Bracket override; NaN means the family's own parameter domain.
  double lo = std::nan("");
  double hi = std::nan("");
};

// Bisection for the parameter where the one-arm estimate crosses `threshold`
// at box radius n. Throws bracket_error naming the failing endpoint when both
// bracket estimates land on the same side.
double pseudo_critical(const LawFamily& family, int n, const EdgeSemantics& sem,
                       const PseudoCriticalOptions& opts);

}  // namespace perc
