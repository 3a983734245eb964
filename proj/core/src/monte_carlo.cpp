#include "perc/monte_carlo.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include "perc/version.hpp"

namespace perc {

namespace {

constexpr double kZ95 = 1.959963984540054;

int resolve_workers(int workers, std::int64_t samples) {
  if (workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(samples, 1)));
}

void wilson_interval(Estimate& e) {
  const double n = static_cast<double>(e.samples);
  const double p = e.p_hat;
  e.stderr_ = std::sqrt(p * (1.0 - p) / n);
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = p + z2 / (2.0 * n);
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  e.ci_low = std::max(0.0, (center - half) / denom);
  e.ci_high = std::min(1.0, (center + half) / denom);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Estimate::csv_header() {
  return "model,d,n,semantics,p_hat,stderr,ci_low,ci_high,samples,seed,version";
}

std::string Estimate::csv_row() const {
  std::string row = csv_field(model);
  row += "," + std::to_string(dim);
  row += "," + std::to_string(n);
  row += "," + csv_field(semantics);
  row += "," + format_double(p_hat);
  row += "," + format_double(stderr_);
  row += "," + format_double(ci_low);
  row += "," + format_double(ci_high);
  row += "," + std::to_string(samples);
  row += "," + std::to_string(seed);
  row += ",";
  row += kVersion;
  return row;
}

Estimate estimate_one_arm(const LocalLaw& law, int n, const EdgeSemantics& sem,
                          std::int64_t samples, std::uint64_t seed, int workers,
                          const std::string& model) {
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  const SamplingTable table(law);
  const int nworkers = resolve_workers(workers, samples);
  // Contiguous sample ranges per worker; every draw is keyed by the sample
  // index, so the totals are identical for any worker count.
  std::vector<std::int64_t> hits(nworkers, 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < nworkers; ++w) {
    const std::int64_t begin = samples * w / nworkers;
    const std::int64_t end = samples * (w + 1) / nworkers;
    auto job = [&, begin, end, w] {
      Explorer ex(law.dim, n);
      std::int64_t local = 0;
      for (std::int64_t i = begin; i < end; ++i)
        local += ex.run(table, sem, rng::SampleStream{seed, static_cast<std::uint64_t>(i)})
                     .reached_boundary
                     ? 1
                     : 0;
      hits[w] = local;
    };
    if (nworkers == 1)
      job();
    else
      pool.emplace_back(job);
  }
  for (auto& t : pool) t.join();
  std::int64_t total = 0;
  for (auto h : hits) total += h;

  Estimate e;
  e.model = model.empty() ? "law" : model;
  e.dim = law.dim;
  e.n = n;
  e.semantics = semantics_name(sem);
  e.samples = samples;
  e.seed = seed;
  e.p_hat = static_cast<double>(total) / static_cast<double>(samples);
  wilson_interval(e);
  return e;
}

Estimate estimate_one_arm_bond(double p, int dim, int n, std::int64_t samples,
                               std::uint64_t seed, int workers) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("bond probability must lie in [0,1]");
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  const int nworkers = resolve_workers(workers, samples);
  std::vector<std::int64_t> hits(nworkers, 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < nworkers; ++w) {
    const std::int64_t begin = samples * w / nworkers;
    const std::int64_t end = samples * (w + 1) / nworkers;
    auto job = [&, w, begin, end] {
      Explorer ex(dim, n);
      std::int64_t local = 0;
      for (std::int64_t i = begin; i < end; ++i)
        local += ex.run_bond(p, rng::SampleStream{seed, static_cast<std::uint64_t>(i)})
                     .reached_boundary
                     ? 1
                     : 0;
      hits[w] = local;
    };
    if (nworkers == 1)
      job();
    else
      pool.emplace_back(job);
  }
  for (auto& t : pool) t.join();
  std::int64_t total = 0;
  for (auto h : hits) total += h;

  Estimate e;
  char model[48];
  std::snprintf(model, sizeof model, "bond:%.17g", p);
  e.model = model;
  e.dim = dim;
  e.n = n;
  e.semantics = "bond";
  e.samples = samples;
  e.seed = seed;
  e.p_hat = static_cast<double>(total) / static_cast<double>(samples);
  wilson_interval(e);
  return e;
}

std::vector<Estimate> scan_parameter(const LawFamily& family, const std::vector<double>& grid,
                                     int n, const EdgeSemantics& sem, std::int64_t samples,
                                     std::uint64_t seed, int workers,
                                     bool common_random_numbers) {
  std::vector<Estimate> out;
  out.reserve(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    const LocalLaw law = family.build(grid[i]);
    const std::uint64_t eval_seed =
        common_random_numbers ? seed : rng::mix64(seed ^ (0x5CA1AB1Eu + i));
    char model[64];
    std::snprintf(model, sizeof model, "%s:%.17g", family.name.c_str(), grid[i]);
    out.push_back(estimate_one_arm(law, n, sem, samples, eval_seed, workers, model));
  }
  return out;
}

DecayFit fit_decay(const LocalLaw& law, const std::vector<int>& radii,
                   const EdgeSemantics& sem, std::int64_t samples, std::uint64_t seed,
                   int workers) {
  if (radii.size() < 3)
    throw insufficient_data_error("fit_decay needs at least three radii");
  DecayFit fit;
  for (size_t i = 0; i < radii.size(); ++i) {
    const std::uint64_t eval_seed = rng::mix64(seed ^ (0xDECA1u + i));
    const Estimate e = estimate_one_arm(law, radii[i], sem, samples, eval_seed, workers);
    if (e.p_hat <= 0.0) continue;  // log undefined: drop the radius
    fit.radii.push_back(radii[i]);
    fit.log_p_hat.push_back(std::log(e.p_hat));
  }
  const size_t k = fit.radii.size();
  if (k < 3)
    throw insufficient_data_error(
        "fit_decay has fewer than three radii with a positive estimate (" +
        std::to_string(k) + " usable)");

  double sx = 0, sy = 0;
  for (size_t i = 0; i < k; ++i) {
    sx += fit.radii[i];
    sy += fit.log_p_hat[i];
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < k; ++i) {
    const double dx = fit.radii[i] - mx;
    const double dy = fit.log_p_hat[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  fit.c_hat = -slope;
  fit.intercept = my - slope * mx;
  double ss_res = 0;
  for (size_t i = 0; i < k; ++i) {
    const double r = fit.log_p_hat[i] - (fit.intercept + slope * fit.radii[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

double pseudo_critical(const LawFamily& family, int n, const EdgeSemantics& sem,
                       const PseudoCriticalOptions& opts) {
  double lo = std::isnan(opts.lo) ? family.param_lo : opts.lo;
  double hi = std::isnan(opts.hi) ? family.param_hi : opts.hi;
  if (!(lo < hi)) throw std::invalid_argument("pseudo_critical needs lo < hi");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("pseudo_critical needs tol > 0");

  int eval_index = 0;
  auto eval = [&](double param) {
    const std::uint64_t eval_seed = opts.common_random_numbers
                                        ? opts.seed
                                        : rng::mix64(opts.seed ^ (0xB15EC7u + eval_index));
    ++eval_index;
    return estimate_one_arm(family.build(param), n, sem, opts.samples, eval_seed, opts.workers)
        .p_hat;
  };

  const double at_lo = eval(lo);
  if (at_lo >= opts.threshold)
    throw bracket_error("lower endpoint " + std::to_string(lo) + " estimates " +
                        std::to_string(at_lo) + " >= threshold " +
                        std::to_string(opts.threshold) + "; not a bracket");
  const double at_hi = eval(hi);
  if (at_hi < opts.threshold)
    throw bracket_error("upper endpoint " + std::to_string(hi) + " estimates " +
                        std::to_string(at_hi) + " < threshold " +
                        std::to_string(opts.threshold) + "; not a bracket");

  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) < opts.threshold)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace perc
