#pragma once

#include <limits>
#include <vector>

#include "zarank/certificates.hpp"
#include "zarank/geom.hpp"

namespace zarank::detail {

struct peel_outcome {
  std::vector<peel_step> steps;
  int max_degree = 0;
  std::vector<char> removed;  // by unified id
  bool complete = false;
};

inline std::vector<std::vector<int>> unified_adjacency(const bipartite_graph& g) {
  std::vector<std::vector<int>> adj(g.u_count + g.v_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(g.u_count + v);
    adj[g.u_count + v].push_back(u);
  }
  return adj;
}

// Repeatedly removes the minimum-degree vertex (lowest unified id on ties)
// while its degree is at most `threshold`. With an unbounded threshold this
// is the standard degeneracy peel.
inline peel_outcome run_min_degree_peel(const bipartite_graph& g, long long threshold) {
  const int n = g.u_count + g.v_count;
  auto adj = unified_adjacency(g);
  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].size());

  peel_outcome out;
  out.removed.assign(n, 0);
  out.steps.reserve(n);

  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i)
      if (!out.removed[i] && (best == -1 || deg[i] < deg[best])) best = i;
    if (best == -1) break;
    if (static_cast<long long>(deg[best]) > threshold) {
      out.complete = false;
      return out;
    }
    out.steps.push_back({best, deg[best]});
    if (deg[best] > out.max_degree) out.max_degree = deg[best];
    out.removed[best] = 1;
    for (int nb : adj[best])
      if (!out.removed[nb]) --deg[nb];
  }
  out.complete = true;
  return out;
}

}  // namespace zarank::detail
