#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "perc/lattice.hpp"
#include "perc/local_law.hpp"
#include "perc/rng.hpp"

namespace perc {

// How sampled neighborhoods induce an open subgraph:
//   directed        edge u->v open iff the direction u->v is in N(u)
//   union           {u,v} open iff either endpoint grabs it
//   intersection    {u,v} open iff both endpoints grab it (bidirectional)
//   site_iid        vertices open iid; the one-arm event asks for an open
//                   path from o to an open boundary vertex
enum class GraphSemantics { directed, union_undirected, intersection_bidirectional, site_iid };

struct EdgeSemantics {
  GraphSemantics kind = GraphSemantics::directed;
  double site_open_prob = 0.0;  // only for site_iid

  static EdgeSemantics directed() { return {GraphSemantics::directed, 0.0}; }
  static EdgeSemantics union_undirected() { return {GraphSemantics::union_undirected, 0.0}; }
  static EdgeSemantics intersection_bidirectional() {
    return {GraphSemantics::intersection_bidirectional, 0.0};
  }
  static EdgeSemantics site_iid(double p);
};

std::string semantics_name(const EdgeSemantics& sem);
EdgeSemantics parse_semantics(const std::string& text);  // "directed", "union", ..., "site:0.3"

struct ExplorationResult {
  bool reached_boundary = false;
  // Index of the last completed BFS generation (C_0 = {o} is generation 0).
  int generations_used = 0;
  std::int64_t cluster_size = 0;   // |C intersect B_{n+1}| when the run stops
  // Fresh draws made: neighborhood masks or site coins (edge coins for bond
  // runs). Diagnostic only; unlike the fields above it is sensitive to the
  // frontier processing order.
  std::int64_t sites_sampled = 0;
};

// Precomputed per-law sampling table: one uniform per site selects a mask by
// inverse CDF over the support.
struct SamplingTable {
  int dim;
  std::vector<mask_t> support;
  std::vector<double> cum;

  explicit SamplingTable(const LocalLaw& law);
  mask_t sample(double u) const;
};

// Reusable exploration context for B_{n+1}: owns the ball index plus
// epoch-stamped scratch, so consecutive runs cost no per-run clearing.
// Lazy BFS from the origin; a site's neighborhood is sampled at most once per
// run (memoized by ball ordinal); the run stops once the generation that
// first touches the boundary is completed. Every draw is a pure function of
// (seed, sample, site), so reached_boundary, generations_used and
// cluster_size are exactly invariant under frontier processing order;
// sites_sampled alone depends on which inspection got to a site first.
class Explorer {
 public:
  Explorer(int dim, int n, std::int64_t site_cap = kDefaultSiteCap);

  int dim() const;
  int n() const { return n_; }
  const BallIndex& ball() const { return *ball_; }

  ExplorationResult run(const SamplingTable& table, const EdgeSemantics& sem,
                        rng::SampleStream stream);
  // Independent bond percolation at parameter p on edges within B_{n+1}.
  ExplorationResult run_bond(double p, rng::SampleStream stream);

  // Test hook: process each frontier in reverse order; connectivity results
  // must be identical because every draw is keyed by (sample, site).
  void set_reversed_frontier(bool reversed) { reversed_ = reversed; }

 private:
  int n_;
  bool reversed_ = false;
  std::unique_ptr<BallIndex> ball_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> visited_stamp_;
  std::vector<std::uint32_t> sampled_stamp_;
  std::vector<mask_t> sampled_mask_;
  std::vector<std::int64_t> frontier_;
  std::vector<std::int64_t> next_;

  mask_t site_mask(std::int64_t u, const SamplingTable& table,
                   const rng::SampleStream& stream, std::int64_t& sampled);
  bool site_open(std::int64_t u, double p, const rng::SampleStream& stream,
                 std::int64_t& sampled);
};

// One-shot convenience wrapper.
ExplorationResult explore(const LocalLaw& law, int n, const EdgeSemantics& sem,
                          std::uint64_t seed, std::uint64_t sample_index = 0);

}  // namespace perc
