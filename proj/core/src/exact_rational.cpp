#include "perc/exact_rational.hpp"

#include <stdexcept>

#include "strassen.hpp"

namespace perc {

namespace {

void check_exact_dim(int dim) {
  if (dim < 1 || dim > kMaxExactDim)
    throw std::invalid_argument("exact-rational mode supports d <= " +
                                std::to_string(kMaxExactDim));
}

rational pow_rational(const rational& x, int e) {
  rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

void check_unit(const rational& p, const char* name) {
  if (p < 0 || p > 1)
    throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

// GMP comparisons assume canonical form; callers may hand us mpq_class(6, 48).
rational canonical(const rational& x) {
  rational r = x;
  r.canonicalize();
  return r;
}

}  // namespace

rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    rational r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad rational literal '" + text + "'");
    mpz_class den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    rational r{mpz_class(digits), den};
    r.canonicalize();
    return r;
  }
  return rational(mpz_class(text));
}

RationalLaw::RationalLaw(int dim, std::vector<rational> probs_in)
    : dim(dim), probs(std::move(probs_in)) {
  check_exact_dim(dim);
  if (probs.size() != masks::count(dim))
    throw std::invalid_argument("law for d=" + std::to_string(dim) + " needs " +
                                std::to_string(masks::count(dim)) + " mask probabilities");
  for (auto& w : probs) w.canonicalize();
  rational total(0);
  for (const auto& w : probs) {
    if (w < 0) throw std::invalid_argument("mask probabilities must be nonnegative");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("mask probabilities must sum to exactly 1");
}

LocalLaw RationalLaw::to_double() const {
  std::vector<double> out(probs.size());
  for (size_t a = 0; a < probs.size(); ++a) out[a] = probs[a].get_d();
  return LocalLaw(dim, std::move(out));
}

RationalLaw make_iid_exact(int dim, const rational& p_in) {
  check_exact_dim(dim);
  const rational p = canonical(p_in);
  check_unit(p, "p");
  const mask_t m = masks::count(dim);
  const int b = masks::bits(dim);
  const rational q = rational(1) - p;
  std::vector<rational> probs(m);
  for (mask_t a = 0; a < m; ++a) {
    const int k = masks::size(a);
    probs[a] = pow_rational(p, k) * pow_rational(q, b - k);
  }
  return RationalLaw(dim, std::move(probs));
}

RationalLaw make_dng_exact(int dim, const rational& p_in) {
  check_exact_dim(dim);
  const rational p = canonical(p_in);
  check_unit(p, "p");
  const int b = masks::bits(dim);
  const rational mean = rational(b) * p;
  mpz_class k_z;
  mpz_fdiv_q(k_z.get_mpz_t(), mean.get_num().get_mpz_t(), mean.get_den().get_mpz_t());
  int k = static_cast<int>(k_z.get_si());
  rational eps = mean - rational(k_z);
  if (k > b || (k == b && eps > 0)) throw std::invalid_argument("p must lie in [0,1]");
  std::vector<rational> probs(masks::count(dim), rational(0));
  const rational w_k = (rational(1) - eps) / rational(static_cast<long>(binomial(b, k)));
  const rational w_k1 =
      eps > 0 ? eps / rational(static_cast<long>(binomial(b, k + 1))) : rational(0);
  for (mask_t a = 0; a < masks::count(dim); ++a) {
    const int s = masks::size(a);
    if (s == k)
      probs[a] = w_k;
    else if (s == k + 1)
      probs[a] = w_k1;
  }
  return RationalLaw(dim, std::move(probs));
}

RationalLaw make_aon_exact(int dim, const rational& p_in) {
  check_exact_dim(dim);
  const rational p = canonical(p_in);
  check_unit(p, "p");
  std::vector<rational> probs(masks::count(dim), rational(0));
  probs[0] = rational(1) - p;
  probs[masks::full(dim)] = p;
  return RationalLaw(dim, std::move(probs));
}

RationalLaw make_corner_stick_exact(const rational& alpha_in) {
  const rational alpha = canonical(alpha_in);
  if (alpha < 0 || alpha > rational(1, 4))
    throw std::invalid_argument("corner/stick weight must lie in [0, 1/4]");
  const rational beta = (rational(1) - rational(4) * alpha) / rational(2);
  std::vector<rational> probs(16, rational(0));
  probs[0b0101] = alpha;
  probs[0b0110] = alpha;
  probs[0b1001] = alpha;
  probs[0b1010] = alpha;
  probs[0b0011] = beta;
  probs[0b1100] = beta;
  return RationalLaw(2, std::move(probs));
}

namespace {

std::vector<rational> zeta_exact(const RationalLaw& law) {
  const mask_t m = masks::count(law.dim);
  std::vector<rational> zeta = law.probs;
  for (int dir = 0; dir < masks::bits(law.dim); ++dir) {
    const mask_t bit = mask_t{1} << dir;
    for (mask_t a = 0; a < m; ++a)
      if (a & bit) zeta[a] += zeta[a ^ bit];
  }
  return zeta;
}

}  // namespace

std::vector<rational> hitting_profile_exact(const RationalLaw& law) {
  const auto zeta = zeta_exact(law);
  const mask_t m = masks::count(law.dim);
  const mask_t full = masks::full(law.dim);
  std::vector<rational> hit(m);
  for (mask_t a = 0; a < m; ++a) hit[a] = rational(1) - zeta[a ^ full];
  return hit;
}

DominationReport check_local_domination_exact(const RationalLaw& p, const RationalLaw& q,
                                              ComparisonMode mode, MaskRange range) {
  if (p.dim != q.dim) throw std::invalid_argument("laws must share a dimension");
  const auto hp = hitting_profile_exact(p);
  const auto hq = hitting_profile_exact(q);
  const mask_t full = masks::full(p.dim);
  const mask_t lo = range == MaskRange::all ? 0 : 1;
  const mask_t hi = range == MaskRange::all ? full : full - 1;

  DominationReport report;
  bool weak_ok = true;
  bool strict_ok = true;
  for (mask_t a = lo; a <= hi; ++a) {
    const bool weak_here = hp[a] <= hq[a];
    const bool strict_here = hp[a] < hq[a];
    weak_ok = weak_ok && weak_here;
    const bool in_proper = a != 0 && a != full;
    if (in_proper) strict_ok = strict_ok && strict_here;
    const bool failed = mode == ComparisonMode::strict ? (in_proper && !strict_here) : !weak_here;
    if (failed) report.violations.push_back({a, hp[a].get_d(), hq[a].get_d()});
    if (mode == ComparisonMode::weak && hp[a] == hq[a]) report.equalities.push_back(a);
  }
  report.strict = weak_ok && strict_ok;
  report.holds = mode == ComparisonMode::strict ? report.strict : weak_ok;
  return report;
}

PairwiseReport check_pairwise_domination_exact(const RationalLaw& p, const RationalLaw& q) {
  if (p.dim != q.dim) throw std::invalid_argument("laws must share a dimension");
  const auto hp = hitting_profile_exact(p);
  const auto zq = zeta_exact(q);
  const mask_t full = masks::full(p.dim);

  PairwiseReport report;
  report.holds = true;
  for (mask_t a = 1; a <= full; ++a) {
    const mask_t comp = full ^ a;
    for (mask_t b = comp; b > 0; b = (b - 1) & comp) {
      if (b > a) continue;
      const rational lhs = hp[a] * hp[b];
      const rational rhs =
          rational(1) - zq[a ^ full] - zq[b ^ full] + zq[(a | b) ^ full];
      if (lhs > rhs) {
        report.holds = false;
        report.violations.push_back({a, b, lhs.get_d(), rhs.get_d()});
      }
    }
  }
  return report;
}

StochasticResult check_stochastic_domination_exact(const RationalLaw& p, const RationalLaw& q) {
  if (p.dim != q.dim) throw std::invalid_argument("laws must share a dimension");
  std::vector<double> p_dbl(p.probs.size()), q_dbl(q.probs.size());
  for (size_t a = 0; a < p.probs.size(); ++a) {
    p_dbl[a] = p.probs[a].get_d();
    q_dbl[a] = q.probs[a].get_d();
  }
  return detail::strassen_check<rational>(p.dim, p.probs, q.probs, rational(0), p_dbl, q_dbl);
}

}  // namespace perc
