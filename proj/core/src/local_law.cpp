#include "perc/local_law.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace perc {

namespace {

constexpr double kSumTol = 1e-12;

double kahan_sum(const std::vector<double>& xs) {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0,1], got " +
                                std::to_string(p));
}

}  // namespace

LocalLaw::LocalLaw(int dim, std::vector<double> probs_in)
    : dim(dim), probs(std::move(probs_in)) {
  masks::check_dim(dim);
  if (probs.size() != masks::count(dim))
    throw std::invalid_argument("law for d=" + std::to_string(dim) + " needs " +
                                std::to_string(masks::count(dim)) + " mask probabilities, got " +
                                std::to_string(probs.size()));
  for (double w : probs)
    if (!(w >= 0.0))
      throw std::invalid_argument("mask probabilities must be nonnegative");
  const double total = kahan_sum(probs);
  if (std::abs(total - 1.0) > kSumTol)
    throw std::invalid_argument("mask probabilities must sum to 1, got " + std::to_string(total));
}

DegreeDistribution::DegreeDistribution(int dim, std::vector<double> alphas_in)
    : dim(dim), alphas(std::move(alphas_in)) {
  masks::check_dim(dim);
  if (alphas.size() != static_cast<size_t>(2 * dim + 1))
    throw std::invalid_argument("degree distribution for d=" + std::to_string(dim) + " needs " +
                                std::to_string(2 * dim + 1) + " weights");
  for (double w : alphas)
    if (!(w >= 0.0)) throw std::invalid_argument("degree weights must be nonnegative");
  const double total = kahan_sum(alphas);
  if (std::abs(total - 1.0) > kSumTol)
    throw std::invalid_argument("degree weights must sum to 1, got " + std::to_string(total));
}

double DegreeDistribution::mean() const {
  double s = 0.0, c = 0.0;
  for (size_t n = 0; n < alphas.size(); ++n) {
    const double y = static_cast<double>(n) * alphas[n] - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

int DegreeDistribution::min_support() const {
  for (size_t n = 0; n < alphas.size(); ++n)
    if (alphas[n] > 0.0) return static_cast<int>(n);
  return 0;
}

int DegreeDistribution::max_support() const {
  for (size_t n = alphas.size(); n-- > 0;)
    if (alphas[n] > 0.0) return static_cast<int>(n);
  return 0;
}

int DegreeDistribution::range() const { return max_support() - min_support(); }

LocalLaw make_iid(int dim, double p) {
  masks::check_dim(dim);
  check_probability(p, "p");
  const mask_t m = masks::count(dim);
  const int b = masks::bits(dim);
  std::vector<double> probs(m);
  for (mask_t a = 0; a < m; ++a) {
    const int k = masks::size(a);
    probs[a] = std::pow(p, k) * std::pow(1.0 - p, b - k);
  }
  // pow(0,0) = 1 keeps the degenerate endpoints exact.
  return LocalLaw(dim, std::move(probs));
}

LocalLaw make_dng(int dim, double p) {
  masks::check_dim(dim);
  check_probability(p, "p");
  const int b = masks::bits(dim);
  const double mean = b * p;
  int k = static_cast<int>(std::floor(mean));
  double eps = mean - k;
  // Snap k/(2d) inputs that round to eps ~ 1 back onto the point mass.
  if (eps > 1.0 - 1e-9) {
    k += 1;
    eps = 0.0;
  }
  if (k > b) {
    k = b;
    eps = 0.0;
  }
  std::vector<double> alphas(b + 1, 0.0);
  alphas[k] += 1.0 - eps;
  if (eps > 0.0) alphas[k + 1] += eps;
  return make_exchangeable(DegreeDistribution(dim, std::move(alphas)));
}

LocalLaw make_aon(int dim, double p) {
  masks::check_dim(dim);
  check_probability(p, "p");
  std::vector<double> probs(masks::count(dim), 0.0);
  probs[0] = 1.0 - p;
  probs[masks::full(dim)] = p;
  return LocalLaw(dim, std::move(probs));
}

LocalLaw make_exchangeable(const DegreeDistribution& dd) {
  const mask_t m = masks::count(dd.dim);
  const int b = masks::bits(dd.dim);
  std::vector<double> per_mask(b + 1);
  for (int n = 0; n <= b; ++n)
    per_mask[n] = dd.alphas[n] / static_cast<double>(binomial(b, n));
  std::vector<double> probs(m);
  for (mask_t a = 0; a < m; ++a) probs[a] = per_mask[masks::size(a)];
  return LocalLaw(dd.dim, std::move(probs));
}

LocalLaw make_corner_stick(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.25))
    throw std::invalid_argument("corner/stick weight must lie in [0, 1/4], got " +
                                std::to_string(alpha));
  const double beta = (1.0 - 4.0 * alpha) / 2.0;
  std::vector<double> probs(16, 0.0);
  // Corners {+-x} x {+-y}: +x=bit0, -x=bit1, +y=bit2, -y=bit3.
  probs[0b0101] = alpha;
  probs[0b0110] = alpha;
  probs[0b1001] = alpha;
  probs[0b1010] = alpha;
  // Sticks {+x,-x} and {+y,-y}.
  probs[0b0011] = beta;
  probs[0b1100] = beta;
  return LocalLaw(2, std::move(probs));
}

LocalLaw make_soft_opposite(double eps) {
  check_probability(eps, "eps");
  std::vector<double> probs(16, 0.0);
  const double single = (1.0 - eps) / 4.0;
  probs[0b0001] = single;
  probs[0b0010] = single;
  probs[0b0100] = single;
  probs[0b1000] = single;
  probs[0b0011] = eps / 2.0;
  probs[0b1100] = eps / 2.0;
  return LocalLaw(2, std::move(probs));
}

LocalLaw make_soft_perpendicular(double eps) {
  check_probability(eps, "eps");
  std::vector<double> probs(16, 0.0);
  const double single = (1.0 - eps) / 4.0;
  probs[0b0001] = single;
  probs[0b0010] = single;
  probs[0b0100] = single;
  probs[0b1000] = single;
  probs[0b0101] = eps / 4.0;
  probs[0b0110] = eps / 4.0;
  probs[0b1001] = eps / 4.0;
  probs[0b1010] = eps / 4.0;
  return LocalLaw(2, std::move(probs));
}

LocalLaw mix_with_empty(const LocalLaw& q, double p) {
  check_probability(p, "p");
  std::vector<double> probs(q.probs.size());
  for (size_t a = 0; a < probs.size(); ++a) probs[a] = p * q.probs[a];
  probs[0] += 1.0 - p;
  return LocalLaw(q.dim, std::move(probs));
}

double expected_degree(const LocalLaw& law) {
  double s = 0.0, c = 0.0;
  for (mask_t a = 0; a < law.mask_count(); ++a) {
    const double y = masks::size(a) * law.probs[a] - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

DegreeDistribution degree_distribution(const LocalLaw& law) {
  const int b = masks::bits(law.dim);
  std::vector<double> sum(b + 1, 0.0), comp(b + 1, 0.0);
  for (mask_t a = 0; a < law.mask_count(); ++a) {
    const int k = masks::size(a);
    const double y = law.probs[a] - comp[k];
    const double t = sum[k] + y;
    comp[k] = (t - sum[k]) - y;
    sum[k] = t;
  }
  return DegreeDistribution(law.dim, std::move(sum));
}

ExchangeabilityResult is_exchangeable(const LocalLaw& law, double tol) {
  const int b = masks::bits(law.dim);
  // First mask seen of each size is the reference.
  std::vector<mask_t> ref(b + 1, masks::count(law.dim));
  for (mask_t a = 0; a < law.mask_count(); ++a) {
    const int k = masks::size(a);
    if (ref[k] == masks::count(law.dim)) {
      ref[k] = a;
    } else if (std::abs(law.probs[a] - law.probs[ref[k]]) > tol) {
      return {false, ref[k], a};
    }
  }
  return {true, 0, 0};
}

}  // namespace perc
