#pragma once

// Exact transportation solver: successive shortest augmenting paths over the
// bipartite supply/demand graph, with node potentials keeping reduced costs
// nonnegative so Dijkstra stays valid after every augmentation. Instances
// here have at most a handful of nodes; exactness is the point, not speed.

#include <cstddef>
#include <optional>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/rational.hpp"

namespace freelip::detail {

struct TransportResult {
  Rational cost;
  std::vector<std::vector<Rational>> flow;  // flow[i][j] from supply i to demand j
};

// Requires positive supplies and demands with equal totals, and nonnegative
// costs (metric distances always are).
inline TransportResult solve_transport(const std::vector<Rational>& supply,
                                       const std::vector<Rational>& demand,
                                       const std::vector<std::vector<Rational>>& cost) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  if (m == 0 || n == 0) throw InternalError("transport instance with empty side");

  std::vector<Rational> supply_left = supply;
  std::vector<Rational> demand_left = demand;
  std::vector<std::vector<Rational>> flow(m, std::vector<Rational>(n, Rational(0)));
  // Potentials: index 0..m-1 supplies, m..m+n-1 demands.
  std::vector<Rational> pi(m + n, Rational(0));

  Rational remaining(0);
  for (const auto& s : supply) remaining += s;
  {
    Rational check(0);
    for (const auto& d : demand) check += d;
    if (check != remaining) throw InternalError("unbalanced transport instance");
  }

  while (remaining > 0) {
    // Dijkstra from the set of supplies with remaining mass. Arcs: i -> j
    // always (uncapacitated), j -> i when flow[i][j] > 0. Reduced costs are
    // nonnegative by the potential invariant.
    const std::size_t nodes = m + n;
    std::vector<std::optional<Rational>> dist(nodes);
    std::vector<int> parent(nodes, -1);
    std::vector<bool> done(nodes, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (supply_left[i] > 0) dist[i] = Rational(0);
    }
    for (std::size_t iter = 0; iter < nodes; ++iter) {
      int u = -1;
      for (std::size_t v = 0; v < nodes; ++v) {
        if (done[v] || !dist[v]) continue;
        if (u < 0 || *dist[v] < *dist[u]) u = static_cast<int>(v);
      }
      if (u < 0) break;
      done[u] = true;
      if (static_cast<std::size_t>(u) < m) {
        const std::size_t i = static_cast<std::size_t>(u);
        for (std::size_t j = 0; j < n; ++j) {
          const Rational reduced = cost[i][j] + pi[i] - pi[m + j];
          const Rational cand = *dist[u] + reduced;
          if (!dist[m + j] || cand < *dist[m + j]) {
            dist[m + j] = cand;
            parent[m + j] = u;
          }
        }
      } else {
        const std::size_t j = static_cast<std::size_t>(u) - m;
        for (std::size_t i = 0; i < m; ++i) {
          if (flow[i][j] <= 0) continue;
          const Rational reduced = -cost[i][j] + pi[m + j] - pi[i];
          const Rational cand = *dist[u] + reduced;
          if (!dist[i] || cand < *dist[i]) {
            dist[i] = cand;
            parent[i] = u;
          }
        }
      }
    }

    int target = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (demand_left[j] <= 0 || !dist[m + j]) continue;
      if (target < 0 || *dist[m + j] < *dist[m + target]) target = static_cast<int>(j);
    }
    if (target < 0) throw InternalError("transport network disconnected");

    // Bottleneck along the path: endpoint masses and reverse-arc flows.
    Rational bottleneck = demand_left[static_cast<std::size_t>(target)];
    {
      std::size_t v = m + static_cast<std::size_t>(target);
      while (parent[v] >= 0) {
        const std::size_t u = static_cast<std::size_t>(parent[v]);
        if (u < m && v >= m) {
          // forward arc, uncapacitated
        } else {
          const Rational& f = flow[v][u - m];  // reverse of demand(u) -> supply(v)
          if (f < bottleneck) bottleneck = f;
        }
        v = u;
      }
      if (supply_left[v] < bottleneck) bottleneck = supply_left[v];
    }
    if (bottleneck <= 0) throw InternalError("transport augmentation stalled");

    {
      std::size_t v = m + static_cast<std::size_t>(target);
      while (parent[v] >= 0) {
        const std::size_t u = static_cast<std::size_t>(parent[v]);
        if (u < m && v >= m) {
          flow[u][v - m] += bottleneck;
        } else {
          flow[v][u - m] -= bottleneck;
        }
        v = u;
      }
      supply_left[v] -= bottleneck;
    }
    demand_left[static_cast<std::size_t>(target)] -= bottleneck;
    remaining -= bottleneck;

    const Rational reach = *dist[m + static_cast<std::size_t>(target)];
    for (std::size_t v = 0; v < m + n; ++v) {
      pi[v] += dist[v] && *dist[v] < reach ? *dist[v] : reach;
    }
  }

  TransportResult result;
  result.flow = std::move(flow);
  result.cost = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) result.cost += result.flow[i][j] * cost[i][j];
  }
  return result;
}

}  // namespace freelip::detail
