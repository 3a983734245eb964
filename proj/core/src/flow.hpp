#pragma once

// Dinic max-flow templated on the capacity type, so the stochastic
// domination test runs both in double and in exact rational arithmetic.
// Graphs here are tiny (support-mask bipartite graphs, <= ~130 nodes).

#include <cstdint>
#include <queue>
#include <vector>

namespace perc::detail {

template <class Cap>
class FlowGraph {
 public:
  FlowGraph(int nodes, Cap zero_tol) : head_(nodes, -1), zero_tol_(zero_tol) {}

  void add_edge(int from, int to, Cap cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], Cap(0)});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  Cap max_flow(int source, int sink) {
    Cap total(0);
    while (build_levels(source, sink)) {
      iter_ = head_;
      while (true) {
        const Cap pushed = augment(source, sink, Cap(-1));
        if (!(pushed > zero_tol_)) break;
        total += pushed;
      }
    }
    return total;
  }

  // After max_flow: nodes still reachable from `source` in the residual graph.
  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[source] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = edges_[e].next) {
        if (edges_[e].cap > zero_tol_ && !seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          q.push(edges_[e].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int next;
    Cap cap;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    q.push(source);
    level_[source] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = edges_[e].next) {
        if (edges_[e].cap > zero_tol_ && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // limit < 0 means unbounded.
  Cap augment(int u, int sink, Cap limit) {
    if (u == sink) return limit;
    for (int& e = iter_[u]; e >= 0; e = edges_[e].next) {
      Edge& fwd = edges_[e];
      if (!(fwd.cap > zero_tol_) || level_[fwd.to] != level_[u] + 1) continue;
      Cap pass = fwd.cap;
      if (limit >= Cap(0) && limit < pass) pass = limit;
      const Cap pushed = augment(fwd.to, sink, pass);
      if (pushed > zero_tol_) {
        fwd.cap -= pushed;
        edges_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return Cap(0);
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
  Cap zero_tol_;
};

}  // namespace perc::detail
