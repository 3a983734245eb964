#include "perc/exact_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "perc/domination.hpp"

namespace perc {

namespace {

struct LawSupport {
  std::vector<mask_t> masks;
  std::vector<double> probs;

  explicit LawSupport(const LocalLaw& law) {
    for (mask_t a = 0; a < law.mask_count(); ++a) {
      if (law.probs[a] <= 0.0) continue;
      masks.push_back(a);
      probs.push_back(law.probs[a]);
    }
  }
  LawSupport(std::vector<mask_t> m, std::vector<double> p)
      : masks(std::move(m)), probs(std::move(p)) {}
};

// Sites whose draw influences the one-arm event: directed exploration stops
// on first boundary contact and never reads a boundary mask, the undirected
// semantics and site percolation read draws on all of B_{n+1}.
std::vector<std::int64_t> relevant_sites(const BallIndex& ball, int n,
                                         const EdgeSemantics& sem) {
  std::vector<std::int64_t> sites;
  for (std::int64_t u = 0; u < ball.size(); ++u)
    if (sem.kind != GraphSemantics::directed || ball.norm(u) <= n) sites.push_back(u);
  return sites;
}

struct IndicatorScratch {
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> visited;
  std::vector<std::int64_t> queue;

  explicit IndicatorScratch(std::int64_t size) : visited(static_cast<size_t>(size), 0) {}
};

// Eager one-arm indicator on a fully specified configuration; the same
// connectivity rules as the lazy exploration, minus the sampling.
bool one_arm_reaches(const BallIndex& ball, int n, const std::vector<mask_t>& config,
                     const EdgeSemantics& sem, IndicatorScratch& scratch) {
  const int b = 2 * ball.dim();
  ++scratch.epoch;
  const std::int64_t origin = ball.origin();
  if (sem.kind == GraphSemantics::site_iid && config[origin] == 0) return false;
  scratch.visited[origin] = scratch.epoch;
  scratch.queue.clear();
  scratch.queue.push_back(origin);
  for (size_t head = 0; head < scratch.queue.size(); ++head) {
    const std::int64_t u = scratch.queue[head];
    for (int dir = 0; dir < b; ++dir) {
      const std::int64_t v = ball.neighbor(u, dir);
      if (v < 0 || scratch.visited[v] == scratch.epoch) continue;
      bool open = false;
      switch (sem.kind) {
        case GraphSemantics::directed:
          open = masks::contains(config[u], dir);
          break;
        case GraphSemantics::union_undirected:
          open = masks::contains(config[u], dir) ||
                 masks::contains(config[v], masks::opposite(dir));
          break;
        case GraphSemantics::intersection_bidirectional:
          open = masks::contains(config[u], dir) &&
                 masks::contains(config[v], masks::opposite(dir));
          break;
        case GraphSemantics::site_iid:
          open = config[v] != 0;
          break;
      }
      if (!open) continue;
      if (ball.norm(v) == n + 1) return true;
      scratch.visited[v] = scratch.epoch;
      scratch.queue.push_back(v);
    }
  }
  return false;
}

ExactResult enumerate_one_arm(const BallIndex& ball, int n,
                              const std::vector<std::int64_t>& sites,
                              const std::vector<const LawSupport*>& supports,
                              const EdgeSemantics& sem, std::int64_t budget) {
  long double total_configs = 1.0L;
  for (const auto* s : supports) total_configs *= static_cast<long double>(s->masks.size());
  if (total_configs > static_cast<long double>(budget)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "exact enumeration needs %.6Lg configurations, over the budget of %lld",
                  total_configs, static_cast<long long>(budget));
    throw budget_error(msg, static_cast<double>(total_configs));
  }

  const size_t k = sites.size();
  std::vector<mask_t> config(static_cast<size_t>(ball.size()), 0);
  std::vector<size_t> digit(k, 0);
  for (size_t i = 0; i < k; ++i) config[sites[i]] = supports[i]->masks[0];
  IndicatorScratch scratch(ball.size());

  double sum = 0.0, comp = 0.0;
  std::int64_t configs = 0;
  while (true) {
    ++configs;
    if (one_arm_reaches(ball, n, config, sem, scratch)) {
      double w = 1.0;
      for (size_t i = 0; i < k; ++i) w *= supports[i]->probs[digit[i]];
      const double y = w - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    // odometer advance
    size_t i = 0;
    for (; i < k; ++i) {
      if (++digit[i] < supports[i]->masks.size()) {
        config[sites[i]] = supports[i]->masks[digit[i]];
        break;
      }
      digit[i] = 0;
      config[sites[i]] = supports[i]->masks[0];
    }
    if (i == k) break;
  }
  return {sum, configs};
}

void check_interpolation_hypothesis(const LocalLaw& p, const LocalLaw& q) {
  const auto report = check_local_domination(p, q, ComparisonMode::weak, 1e-9);
  if (!report.holds) {
    const auto& v = report.violations.front();
    throw std::invalid_argument(
        "interpolation requires site-wise domination of the hitting profiles "
        "(hit_P[A] <= hit_Q[A] for every proper nonempty A); violated at A=" +
        masks::mask_to_string(v.mask, p.dim) + " with " + std::to_string(v.lhs) + " > " +
        std::to_string(v.rhs));
  }
}

}  // namespace

ExactResult exact_one_arm(const LocalLaw& law, int n, const EdgeSemantics& sem,
                          const OracleOptions& opts) {
  const BallIndex ball(law.dim, n + 1);
  const auto sites = relevant_sites(ball, n, sem);
  if (sem.kind == GraphSemantics::site_iid) {
    const double p = sem.site_open_prob;
    const LawSupport coin({0, 1}, {1.0 - p, p});
    std::vector<const LawSupport*> supports(sites.size(), &coin);
    return enumerate_one_arm(ball, n, sites, supports, sem, opts.budget);
  }
  const LawSupport support(law);
  std::vector<const LawSupport*> supports(sites.size(), &support);
  return enumerate_one_arm(ball, n, sites, supports, sem, opts.budget);
}

ExactResult exact_one_arm_interpolated(const LocalLaw& p, const LocalLaw& q,
                                       const std::vector<Point>& u, int n,
                                       const EdgeSemantics& sem, const OracleOptions& opts) {
  if (p.dim != q.dim) throw std::invalid_argument("laws must share a dimension");
  if (sem.kind == GraphSemantics::site_iid)
    throw std::invalid_argument("interpolation applies to neighborhood laws, not site:<p>");
  check_interpolation_hypothesis(p, q);

  const BallIndex ball(p.dim, n + 1);
  const auto sites = relevant_sites(ball, n, sem);
  std::vector<bool> upgraded(static_cast<size_t>(ball.size()), false);
  for (const auto& x : u) {
    const std::int64_t ord = ball.ordinal(x);
    const bool relevant =
        ord >= 0 && std::find(sites.begin(), sites.end(), ord) != sites.end();
    if (!relevant)
      throw std::invalid_argument("interpolation site outside the relevant region");
    if (upgraded[ord]) throw std::invalid_argument("duplicate interpolation site");
    upgraded[ord] = true;
  }

  const LawSupport sp(p), sq(q);
  std::vector<const LawSupport*> supports;
  supports.reserve(sites.size());
  for (const auto ord : sites) supports.push_back(upgraded[ord] ? &sq : &sp);
  return enumerate_one_arm(ball, n, sites, supports, sem, opts.budget);
}

MonotonicityResult verify_interpolation_monotonicity(const LocalLaw& p, const LocalLaw& q,
                                                     int n, const EdgeSemantics& sem,
                                                     double tol, const OracleOptions& opts) {
  if (p.dim != q.dim) throw std::invalid_argument("laws must share a dimension");
  if (sem.kind == GraphSemantics::site_iid)
    throw std::invalid_argument("interpolation applies to neighborhood laws, not site:<p>");
  check_interpolation_hypothesis(p, q);

  const BallIndex ball(p.dim, n + 1);
  const auto sites = relevant_sites(ball, n, sem);
  const size_t k = sites.size();
  if (k > 24) throw budget_error("interpolation lattice too large: 2^" + std::to_string(k) +
                                     " upgrade sets",
                                 std::pow(2.0, static_cast<double>(k)));

  const LawSupport sp(p), sq(q);
  // Total work over all upgrade sets factorizes as prod (|supp P| + |supp Q|).
  long double total = 1.0L;
  for (size_t i = 0; i < k; ++i)
    total *= static_cast<long double>(sp.masks.size() + sq.masks.size());
  if (total > static_cast<long double>(opts.budget)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "monotonicity sweep needs %.6Lg configurations, over the budget of %lld",
                  total, static_cast<long long>(opts.budget));
    throw budget_error(msg, static_cast<double>(total));
  }

  std::vector<double> value(size_t{1} << k);
  std::vector<const LawSupport*> supports(k);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
    for (size_t i = 0; i < k; ++i) supports[i] = (bits >> i) & 1 ? &sq : &sp;
    value[bits] = enumerate_one_arm(ball, n, sites, supports, sem, opts.budget).value;
  }

  MonotonicityResult result;
  result.holds = true;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
    for (size_t i = 0; i < k; ++i) {
      if ((bits >> i) & 1) continue;
      const std::uint32_t up = bits | (std::uint32_t{1} << i);
      if (value[bits] > value[up] + tol) {
        result.holds = false;
        MonotonicityCounterexample ce;
        for (size_t j = 0; j < k; ++j)
          if ((bits >> j) & 1) ce.u.push_back(ball.point(sites[j]));
        ce.added = ball.point(sites[i]);
        ce.value_before = value[bits];
        ce.value_after = value[up];
        result.counterexample = std::move(ce);
        return result;
      }
    }
  }
  return result;
}

PivotalityResult classify_pivotality(const BallIndex& ball, const std::vector<mask_t>& config,
                                     const Point& a) {
  if (config.size() != static_cast<size_t>(ball.size()))
    throw std::invalid_argument("configuration size does not match the ball");
  const std::int64_t a_ord = ball.ordinal(a);
  const int n = ball.radius() - 1;
  if (a_ord < 0 || ball.norm(a_ord) > n)
    throw std::invalid_argument("pivotality site must lie in the inner ball");

  IndicatorScratch scratch(ball.size());
  auto reaches_with = [&](mask_t mask_at_a) {
    std::vector<mask_t> patched = config;
    patched[a_ord] = mask_at_a;
    for (std::int64_t v = 0; v < ball.size(); ++v)
      if (ball.norm(v) == n + 1) patched[v] = 0;
    return one_arm_reaches(ball, n, patched, EdgeSemantics::directed(), scratch);
  };

  if (reaches_with(0)) return {PivotalityCase::connected_without_a, 0};
  if (!reaches_with(masks::full(ball.dim()))) return {PivotalityCase::blocked_even_if_full, 0};

  // Escape set: directions from a whose endpoint reaches the boundary without
  // revisiting a. Backward closure from the boundary along directed edges,
  // with a excluded as an intermediate.
  const int b = 2 * ball.dim();
  std::vector<char> escapes(static_cast<size_t>(ball.size()), 0);
  std::vector<std::int64_t> stack;
  for (std::int64_t v = 0; v < ball.size(); ++v) {
    if (ball.norm(v) == n + 1) {
      escapes[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const std::int64_t v = stack.back();
    stack.pop_back();
    for (int dir = 0; dir < b; ++dir) {
      const std::int64_t w = ball.neighbor(v, dir);  // candidate predecessor
      if (w < 0 || w == a_ord || escapes[w] || ball.norm(w) > n) continue;
      if (masks::contains(config[w], masks::opposite(dir))) {
        escapes[w] = 1;
        stack.push_back(w);
      }
    }
  }
  mask_t escape_set = 0;
  for (int dir = 0; dir < b; ++dir) {
    const std::int64_t v = ball.neighbor(a_ord, dir);
    if (v >= 0 && escapes[v]) escape_set |= mask_t{1} << dir;
  }
  return {PivotalityCase::pivotal, escape_set};
}

ExactResult exact_bond_one_arm(double p, int dim, int n, const OracleOptions& opts) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("bond probability must lie in [0,1]");
  const BallIndex ball(dim, n + 1);
  const int b = 2 * dim;

  struct Edge {
    std::int64_t u, v;
  };
  std::vector<Edge> edges;
  for (std::int64_t u = 0; u < ball.size(); ++u) {
    if (ball.norm(u) > n) continue;  // every relevant edge has an inner endpoint
    for (int dir = 0; dir < b; ++dir) {
      const std::int64_t v = ball.neighbor(u, dir);
      if (v < 0) continue;
      if (ball.norm(v) <= n && v < u) continue;  // inner-inner edges once
      edges.push_back({u, v});
    }
  }
  const int ne = static_cast<int>(edges.size());
  if (ne > 62 || (std::int64_t{1} << ne) > opts.budget) {
    const double configs = std::pow(2.0, ne);
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "exact bond enumeration needs %.6g configurations, over the budget of %lld",
                  configs, static_cast<long long>(opts.budget));
    throw budget_error(msg, configs);
  }

  std::vector<double> pow_open(ne + 1), pow_closed(ne + 1);
  pow_open[0] = pow_closed[0] = 1.0;
  for (int i = 1; i <= ne; ++i) {
    pow_open[i] = pow_open[i - 1] * p;
    pow_closed[i] = pow_closed[i - 1] * (1.0 - p);
  }

  // Adjacency as edge-index lists per site for the BFS.
  std::vector<std::vector<std::pair<std::int64_t, int>>> adj(
      static_cast<size_t>(ball.size()));
  for (int e = 0; e < ne; ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }

  IndicatorScratch scratch(ball.size());
  double sum = 0.0, comp = 0.0;
  const std::uint64_t count = std::uint64_t{1} << ne;
  for (std::uint64_t open = 0; open < count; ++open) {
    ++scratch.epoch;
    scratch.queue.clear();
    scratch.queue.push_back(ball.origin());
    scratch.visited[ball.origin()] = scratch.epoch;
    bool reached = false;
    for (size_t head = 0; head < scratch.queue.size() && !reached; ++head) {
      const std::int64_t u = scratch.queue[head];
      for (const auto& [v, e] : adj[u]) {
        if (!((open >> e) & 1) || scratch.visited[v] == scratch.epoch) continue;
        if (ball.norm(v) == n + 1) {
          reached = true;
          break;
        }
        scratch.visited[v] = scratch.epoch;
        scratch.queue.push_back(v);
      }
    }
    if (reached) {
      const int k = std::popcount(open);
      const double y = pow_open[k] * pow_closed[ne - k] - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  return {sum, static_cast<std::int64_t>(count)};
}

std::pair<double, double> exact_dir_undir_check(double p, int dim, int n,
                                                const OracleOptions& opts) {
  const double lhs = exact_one_arm(make_iid(dim, p), n, EdgeSemantics::directed(), opts).value;
  const double rhs = exact_bond_one_arm(p, dim, n, opts).value;
  return {lhs, rhs};
}

std::pair<double, double> exact_aon_site_check(double p, int dim, int n,
                                               const OracleOptions& opts) {
  const double lhs =
      exact_one_arm(make_aon(dim, p), n + 1, EdgeSemantics::directed(), opts).value;
  const double rhs =
      exact_one_arm(make_aon(dim, p), n, EdgeSemantics::site_iid(p), opts).value;
  return {lhs, rhs};
}

}  // namespace perc
