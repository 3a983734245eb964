#include "perc/exploration.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace perc {

EdgeSemantics EdgeSemantics::site_iid(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("site open probability must lie in [0,1]");
  return {GraphSemantics::site_iid, p};
}

std::string semantics_name(const EdgeSemantics& sem) {
  switch (sem.kind) {
    case GraphSemantics::directed:
      return "directed";
    case GraphSemantics::union_undirected:
      return "union";
    case GraphSemantics::intersection_bidirectional:
      return "bidirectional";
    case GraphSemantics::site_iid: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "site:%g", sem.site_open_prob);
      return buf;
    }
  }
  return "?";
}

EdgeSemantics parse_semantics(const std::string& text) {
  if (text == "directed") return EdgeSemantics::directed();
  if (text == "union") return EdgeSemantics::union_undirected();
  if (text == "bidirectional" || text == "intersection")
    return EdgeSemantics::intersection_bidirectional();
  if (text.rfind("site:", 0) == 0) return EdgeSemantics::site_iid(std::stod(text.substr(5)));
  throw std::invalid_argument(
      "unknown semantics '" + text +
      "' (expected directed, union, bidirectional, or site:<p>)");
}

SamplingTable::SamplingTable(const LocalLaw& law) : dim(law.dim) {
  double acc = 0.0;
  for (mask_t a = 0; a < law.mask_count(); ++a) {
    if (law.probs[a] <= 0.0) continue;
    acc += law.probs[a];
    support.push_back(a);
    cum.push_back(acc);
  }
  if (!cum.empty()) cum.back() = 1.0;  // swallow the rounding of the last edge
}

mask_t SamplingTable::sample(double u) const {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  const size_t i = it == cum.end() ? cum.size() - 1 : static_cast<size_t>(it - cum.begin());
  return support[i];
}

Explorer::Explorer(int dim, int n, std::int64_t site_cap) : n_(n) {
  if (n < 0) throw std::invalid_argument("box radius must be nonnegative");
  ball_ = std::make_unique<BallIndex>(dim, n + 1, site_cap);
  const auto sz = static_cast<size_t>(ball_->size());
  visited_stamp_.assign(sz, 0);
  sampled_stamp_.assign(sz, 0);
  sampled_mask_.assign(sz, 0);
}

int Explorer::dim() const { return ball_->dim(); }

mask_t Explorer::site_mask(std::int64_t u, const SamplingTable& table,
                           const rng::SampleStream& stream, std::int64_t& sampled) {
  if (sampled_stamp_[u] != epoch_) {
    sampled_stamp_[u] = epoch_;
    sampled_mask_[u] = table.sample(stream.site_uniform(static_cast<std::uint32_t>(u), 0));
    ++sampled;
  }
  return sampled_mask_[u];
}

bool Explorer::site_open(std::int64_t u, double p, const rng::SampleStream& stream,
                         std::int64_t& sampled) {
  if (sampled_stamp_[u] != epoch_) {
    sampled_stamp_[u] = epoch_;
    sampled_mask_[u] = stream.site_uniform(static_cast<std::uint32_t>(u), 0) < p ? 1 : 0;
    ++sampled;
  }
  return sampled_mask_[u] != 0;
}

ExplorationResult Explorer::run(const SamplingTable& table, const EdgeSemantics& sem,
                                rng::SampleStream stream) {
  if (sem.kind != GraphSemantics::site_iid && table.dim != ball_->dim())
    throw std::invalid_argument("law dimension does not match the explorer");
  ++epoch_;
  const BallIndex& ball = *ball_;
  const int b = 2 * ball.dim();
  ExplorationResult res;

  std::int64_t origin = ball.origin();
  if (sem.kind == GraphSemantics::site_iid &&
      !site_open(origin, sem.site_open_prob, stream, res.sites_sampled))
    return res;  // closed origin: empty cluster

  visited_stamp_[origin] = epoch_;
  res.cluster_size = 1;
  frontier_.clear();
  frontier_.push_back(origin);

  while (!frontier_.empty() && !res.reached_boundary) {
    next_.clear();
    if (reversed_) std::reverse(frontier_.begin(), frontier_.end());
    for (const std::int64_t u : frontier_) {
      for (int dir = 0; dir < b; ++dir) {
        const std::int64_t v = ball.neighbor(u, dir);
        if (v < 0 || visited_stamp_[v] == epoch_) continue;
        bool open = false;
        switch (sem.kind) {
          case GraphSemantics::directed:
            open = masks::contains(site_mask(u, table, stream, res.sites_sampled), dir);
            break;
          case GraphSemantics::union_undirected: {
            // Both endpoint neighborhoods are sampled: the edge state is a
            // property of the pair, whether or not v ever joins the cluster.
            const bool from_u =
                masks::contains(site_mask(u, table, stream, res.sites_sampled), dir);
            const bool from_v = masks::contains(site_mask(v, table, stream, res.sites_sampled),
                                                masks::opposite(dir));
            open = from_u || from_v;
            break;
          }
          case GraphSemantics::intersection_bidirectional: {
            const bool from_u =
                masks::contains(site_mask(u, table, stream, res.sites_sampled), dir);
            const bool from_v = masks::contains(site_mask(v, table, stream, res.sites_sampled),
                                                masks::opposite(dir));
            open = from_u && from_v;
            break;
          }
          case GraphSemantics::site_iid:
            open = site_open(v, sem.site_open_prob, stream, res.sites_sampled);
            break;
        }
        if (!open) continue;
        visited_stamp_[v] = epoch_;
        ++res.cluster_size;
        if (ball.norm(v) == n_ + 1) res.reached_boundary = true;
        next_.push_back(v);
      }
    }
    if (!next_.empty()) ++res.generations_used;
    frontier_.swap(next_);
  }
  return res;
}

ExplorationResult Explorer::run_bond(double p, rng::SampleStream stream) {
  ++epoch_;
  const BallIndex& ball = *ball_;
  const int b = 2 * ball.dim();
  ExplorationResult res;

  const std::int64_t origin = ball.origin();
  visited_stamp_[origin] = epoch_;
  res.cluster_size = 1;
  frontier_.clear();
  frontier_.push_back(origin);

  while (!frontier_.empty() && !res.reached_boundary) {
    next_.clear();
    if (reversed_) std::reverse(frontier_.begin(), frontier_.end());
    for (const std::int64_t u : frontier_) {
      for (int dir = 0; dir < b; ++dir) {
        const std::int64_t v = ball.neighbor(u, dir);
        if (v < 0 || visited_stamp_[v] == epoch_) continue;
        // One coin per undirected edge, keyed by its endpoint of smaller
        // ordinal and the direction leading out of it.
        const std::int64_t base = std::min(u, v);
        const int out_dir = base == u ? dir : masks::opposite(dir);
        const double coin =
            stream.site_uniform(static_cast<std::uint32_t>(base), 1 + out_dir);
        ++res.sites_sampled;
        if (coin >= p) continue;
        visited_stamp_[v] = epoch_;
        ++res.cluster_size;
        if (ball.norm(v) == n_ + 1) res.reached_boundary = true;
        next_.push_back(v);
      }
    }
    if (!next_.empty()) ++res.generations_used;
    frontier_.swap(next_);
  }
  return res;
}

ExplorationResult explore(const LocalLaw& law, int n, const EdgeSemantics& sem,
                          std::uint64_t seed, std::uint64_t sample_index) {
  Explorer ex(law.dim, n);
  const SamplingTable table(law);
  return ex.run(table, sem, rng::SampleStream{seed, sample_index});
}

}  // namespace perc
