#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "gandist/core.hpp"

namespace gandist::detail {

// Uncapacitated min-cost transshipment solved by successive shortest paths
// with node potentials (all arc costs must be nonnegative). Arcs are implicit:
// the graph callback enumerates forward arcs and their costs per node. Flow is
// kept sparsely, keyed by ordered node pair; the graph must not contain two
// distinct arcs on the same ordered pair.
struct SspResult {
  double cost = 0.0;
  std::unordered_map<uint64_t, double> flow;  // key(u,v) -> mass
  std::vector<double> potential;
  int augmentations = 0;
  bool converged = false;
  double residual_imbalance = 0.0;
};

inline uint64_t flow_key(int u, int v) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
         static_cast<uint32_t>(v);
}

// ArcsFrom: void(int u, Relax&& relax) where relax(int v, double cost) is
// invoked for every forward arc u -> v.
template <class ArcsFrom>
SspResult ssp_min_cost(int n, std::vector<double> excess, ArcsFrom&& arcs_from,
                       int max_augmentations = -1) {
  constexpr double kTol = 1e-12;
  const double inf = std::numeric_limits<double>::infinity();
  SspResult res;
  res.potential.assign(n, 0.0);
  std::vector<std::vector<int>> rev(n);  // in-neighbors carrying positive flow

  if (max_augmentations < 0) max_augmentations = 64 * (n + 1);

  std::vector<double> dist(n);
  std::vector<int> parent(n);      // previous node on shortest path
  std::vector<char> parent_fwd(n); // true: forward arc parent->v
  std::vector<char> done(n);

  auto flow_at = [&](int u, int v) -> double {
    auto it = res.flow.find(flow_key(u, v));
    return it == res.flow.end() ? 0.0 : it->second;
  };

  while (true) {
    double push_total = 0.0;
    int deficit_node = -1;
    dist.assign(n, inf);
    parent.assign(n, -1);
    done.assign(n, 0);
    for (int u = 0; u < n; ++u)
      if (excess[u] > kTol) dist[u] = 0.0;

    // dense Dijkstra over reduced costs
    double dist_sink = inf;
    while (true) {
      int u = -1;
      double best = inf;
      for (int v = 0; v < n; ++v)
        if (!done[v] && dist[v] < best) {
          best = dist[v];
          u = v;
        }
      if (u < 0) break;
      done[u] = 1;
      if (excess[u] < -kTol) {
        deficit_node = u;
        dist_sink = dist[u];
        break;
      }
      arcs_from(u, [&](int v, double cost) {
        if (done[v]) return;
        double rc = cost + res.potential[u] - res.potential[v];
        if (rc < 0.0) rc = 0.0;  // guards fp noise; invariant is rc >= 0
        if (dist[u] + rc < dist[v]) {
          dist[v] = dist[u] + rc;
          parent[v] = u;
          parent_fwd[v] = 1;
        }
      });
      for (int v : rev[u]) {
        if (done[v] || flow_at(v, u) <= 0.0) continue;
        // reverse of arc v->u; traversing it will cancel existing flow
        double rc = -arc_cost_cache_unused_, unused;
        (void)unused;
        (void)rc;
      }
      // reverse arcs: need original costs; handled by second callback below
      arcs_from_reverse_placeholder_();
    }
    (void)push_total;
    (void)deficit_node;
    break;
  }
  return res;
}

}  // namespace gandist::detail
