#include "perc/domination.hpp"

#include <cmath>

#include "strassen.hpp"

namespace perc {

namespace {

void check_same_dim(int dp, int dq) {
  if (dp != dq) throw std::invalid_argument("laws must share a dimension");
}

}  // namespace

DominationReport check_local_domination(const LocalLaw& p, const LocalLaw& q,
                                        ComparisonMode mode, double tol, MaskRange range) {
  check_same_dim(p.dim, q.dim);
  const HittingProfile hp = hitting_profile(p);
  const HittingProfile hq = hitting_profile(q);
  const mask_t full = masks::full(p.dim);
  const mask_t lo = range == MaskRange::all ? 0 : 1;
  const mask_t hi = range == MaskRange::all ? full : full - 1;

  DominationReport report;
  bool weak_ok = true;
  bool strict_ok = true;
  for (mask_t a = lo; a <= hi; ++a) {
    const double lhs = hp.hit[a];
    const double rhs = hq.hit[a];
    const bool weak_here = lhs <= rhs + tol;
    const bool strict_here = lhs < rhs - tol;
    weak_ok = weak_ok && weak_here;
    const bool in_proper = a != 0 && a != full;
    if (in_proper) strict_ok = strict_ok && strict_here;
    const bool failed = mode == ComparisonMode::strict ? (in_proper && !strict_here) : !weak_here;
    if (failed) report.violations.push_back({a, lhs, rhs});
    if (mode == ComparisonMode::weak && std::abs(lhs - rhs) <= tol)
      report.equalities.push_back(a);
  }
  report.strict = weak_ok && strict_ok;
  report.holds = mode == ComparisonMode::strict ? report.strict : weak_ok;
  return report;
}

PairwiseReport check_pairwise_domination(const LocalLaw& p, const LocalLaw& q, double tol) {
  check_same_dim(p.dim, q.dim);
  const HittingProfile hp = hitting_profile(p);
  const HittingProfile hq = hitting_profile(q);
  const mask_t full = masks::full(p.dim);

  PairwiseReport report;
  report.holds = true;
  for (mask_t a = 1; a <= full; ++a) {
    // Nonempty submasks of the complement, each unordered pair once.
    const mask_t comp = full ^ a;
    for (mask_t b = comp; b > 0; b = (b - 1) & comp) {
      if (b > a) continue;
      const double lhs = hp.hit[a] * hp.hit[b];
      const double rhs = hq.joint_hit(a, b);
      if (lhs > rhs + tol) {
        report.holds = false;
        report.violations.push_back({a, b, lhs, rhs});
      }
    }
  }
  return report;
}

StochasticResult check_stochastic_domination(const LocalLaw& p, const LocalLaw& q) {
  check_same_dim(p.dim, q.dim);
  if (p.dim > 3)
    throw std::invalid_argument("stochastic domination check supports d <= 3");
  return detail::strassen_check<double>(p.dim, p.probs, q.probs, 1e-12, p.probs, q.probs);
}

std::optional<DegreeDistribution> exchangeable_reduce_step(const DegreeDistribution& dd) {
  const int lo = dd.min_support();
  const int hi = dd.max_support();
  if (hi - lo <= 1) return std::nullopt;
  std::vector<double> alphas = dd.alphas;
  const double m = std::min(alphas[lo], alphas[hi]);
  alphas[lo] -= m;
  alphas[hi] -= m;
  if ((lo + hi) % 2 == 0) {
    alphas[(lo + hi) / 2] += 2.0 * m;
  } else {
    alphas[(lo + hi - 1) / 2] += m;
    alphas[(lo + hi + 1) / 2] += m;
  }
  return DegreeDistribution(dd.dim, std::move(alphas));
}

DegreeDistribution exchangeable_reduce(const DegreeDistribution& dd) {
  DegreeDistribution current = dd;
  while (auto next = exchangeable_reduce_step(current)) current = std::move(*next);
  return current;
}

bool f_concavity_check(int dim) {
  // f(n, l) = 1 - C(2d-n, l)/C(2d, l): concavity in n on {0..2d} is, after
  // clearing the common positive denominator, C(M-1,l) + C(M+1,l) >= 2 C(M,l)
  // for M = 2d-n in {1..2d-1}, checked in exact integers.
  masks::check_dim(dim);
  const int b = masks::bits(dim);
  for (int l = 0; l <= b; ++l)
    for (int mid = 1; mid < b; ++mid)
      if (binomial(mid - 1, l) + binomial(mid + 1, l) < 2 * binomial(mid, l)) return false;
  return true;
}

bool binomial_convexity_check(int dim) {
  masks::check_dim(dim);
  const int b = masks::bits(dim);
  for (int l = 0; l <= b; ++l)
    for (int n = 1; n < b; ++n)
      if (binomial(n + 1, l) + binomial(n - 1, l) < 2 * binomial(n, l)) return false;
  return true;
}

}  // namespace perc
