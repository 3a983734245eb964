#pragma once

// Strassen coupling test for stochastic domination between two measures on
// the mask lattice, shared by the double and exact-rational entry points.
// P <=_st Q iff a flow routing each P-mask into containing Q-masks saturates
// all mass; a failed flow yields an up-set witness from the min cut.

#include <vector>

#include "flow.hpp"
#include "perc/domination.hpp"

namespace perc::detail {

template <class Cap, class Probs>
StochasticResult strassen_check(int dim, const Probs& p_probs, const Probs& q_probs,
                                Cap zero_tol, const std::vector<double>& p_dbl,
                                const std::vector<double>& q_dbl) {
  const mask_t m = masks::count(dim);
  std::vector<mask_t> p_support, q_support;
  for (mask_t a = 0; a < m; ++a)
    if (p_probs[a] > Cap(0)) p_support.push_back(a);
  for (mask_t a = 0; a < m; ++a)
    if (q_probs[a] > Cap(0)) q_support.push_back(a);

  const int np = static_cast<int>(p_support.size());
  const int nq = static_cast<int>(q_support.size());
  const int source = np + nq;
  const int sink = source + 1;
  FlowGraph<Cap> g(sink + 1, zero_tol);
  Cap total(0);
  for (int i = 0; i < np; ++i) {
    g.add_edge(source, i, Cap(p_probs[p_support[i]]));
    total += Cap(p_probs[p_support[i]]);
  }
  for (int j = 0; j < nq; ++j) g.add_edge(np + j, sink, Cap(q_probs[q_support[j]]));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      if ((p_support[i] & ~q_support[j]) == 0) g.add_edge(i, np + j, Cap(2));

  const Cap flow = g.max_flow(source, sink);
  StochasticResult result;
  if (!(total - flow > zero_tol)) {
    result.dominated = true;
    return result;
  }

  // Min-cut witness: the up-closure of the residual-reachable P-masks is an
  // up-set with strictly larger P-mass than Q-mass.
  const auto reach = g.residual_reachable(source);
  std::vector<bool> generator(m, false);
  for (int i = 0; i < np; ++i)
    if (reach[i]) generator[p_support[i]] = true;
  result.dominated = false;
  for (mask_t a = 0; a < m; ++a) {
    bool in_upset = false;
    for (mask_t s = a;; s = (s - 1) & a) {
      if (generator[s]) {
        in_upset = true;
        break;
      }
      if (s == 0) break;
    }
    if (in_upset) {
      result.witness_upset.push_back(a);
      result.p_mass += p_dbl[a];
      result.q_mass += q_dbl[a];
    }
  }
  return result;
}

}  // namespace perc::detail
