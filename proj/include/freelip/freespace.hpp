#pragma once

// The Arens-Eells norm of a molecule and certified optimal decompositions.
//
// The defining infimum ranges over arbitrary expressions through arbitrary
// intermediate points, but the triangle inequality makes any relayed route
// at least as expensive as the direct edge, so the norm is the optimum of
// the transportation problem from the positive part of the weights to the
// negative part with unit costs d(p,q). That reduction is exercised by a
// tested property (extending the LP ground set never lowers the optimum).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freelip/error.hpp"
#include "freelip/min_cost_flow.hpp"
#include "freelip/molecule.hpp"

namespace freelip {

namespace detail {

struct TransportSides {
  std::vector<std::string> sources;  // positive support, in space point order
  std::vector<std::string> sinks;    // negative support, in space point order
  std::vector<Rational> supply, demand;
};

inline TransportSides split_supports(const Molecule& mol) {
  TransportSides sides;
  const auto& space = *mol.space();
  for (const auto& id : space.points()) {
    const Rational w = mol.weight(id);
    if (w > 0) {
      sides.sources.push_back(id);
      sides.supply.push_back(w);
    } else if (w < 0) {
      sides.sinks.push_back(id);
      sides.demand.push_back(-w);
    }
  }
  return sides;
}

inline std::vector<std::vector<Rational>> transport_costs(const FiniteMetricSpace& space,
                                                          const TransportSides& sides) {
  std::vector<std::vector<Rational>> cost(sides.sources.size(),
                                          std::vector<Rational>(sides.sinks.size()));
  for (std::size_t i = 0; i < sides.sources.size(); ++i) {
    for (std::size_t j = 0; j < sides.sinks.size(); ++j) {
      cost[i][j] = space.dist(sides.sources[i], sides.sinks[j]);
    }
  }
  return cost;
}

}  // namespace detail

// Exact Arens-Eells norm.
inline Rational aenorm(const Molecule& mol) {
  if (mol.is_zero()) return Rational(0);
  const auto sides = detail::split_supports(mol);
  const auto cost = detail::transport_costs(*mol.space(), sides);
  return detail::solve_transport(sides.supply, sides.demand, cost).cost;
}

// Optimal expression of mol as a positive combination of elementary
// molecules; cost equals aenorm(mol). With target_cost supplied, the optimal
// expression is padded by a canceling pair on the cheapest edge so the cost
// hits the target exactly (the expression is then generally non-optimal).
inline MoleculeDecomposition optimal_decomposition(
    const Molecule& mol, const std::optional<Rational>& target_cost = std::nullopt) {
  if (mol.is_zero()) fail("ZeroMolecule", "the zero molecule has no decomposition");
  const auto sides = detail::split_supports(mol);
  const auto cost = detail::transport_costs(*mol.space(), sides);
  const auto transport = detail::solve_transport(sides.supply, sides.demand, cost);

  MoleculeDecomposition result;
  result.cost = transport.cost;
  for (std::size_t i = 0; i < sides.sources.size(); ++i) {
    for (std::size_t j = 0; j < sides.sinks.size(); ++j) {
      if (transport.flow[i][j] > 0) {
        result.terms.push_back({transport.flow[i][j], sides.sources[i], sides.sinks[j]});
      }
    }
  }

  if (target_cost) {
    if (*target_cost < result.cost) {
      fail("TargetBelowNorm", "target cost " + format_rational(*target_cost) +
                                  " is below the norm " + format_rational(result.cost));
    }
    const Rational extra = *target_cost - result.cost;
    if (extra > 0) {
      const auto& space = *mol.space();
      std::size_t bp = 0, bq = 1;
      for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = i + 1; j < space.size(); ++j) {
          if (space.dist(i, j) < space.dist(bp, bq)) {
            bp = i;
            bq = j;
          }
        }
      }
      const Rational t = extra / (2 * space.dist(bp, bq));
      result.terms.push_back({t, space.points()[bp], space.points()[bq]});
      result.terms.push_back({t, space.points()[bq], space.points()[bp]});
      result.cost = *target_cost;
    }
  }

  if (!(reconstruct(mol.space(), result.terms) == mol)) {
    throw InternalError("decomposition does not reconstruct its molecule");
  }
  if (decomposition_cost(mol.space(), result.terms) != result.cost) {
    throw InternalError("decomposition cost bookkeeping is off");
  }
  return result;
}

// Independent brute-force norm: enumerates every basic feasible solution of
// the transportation polytope (spanning trees of the bipartite support
// graph) and takes the cheapest. Shares nothing with the flow solver above;
// limited to supports of size 4 per side.
inline Rational aenorm_oracle(const Molecule& mol) {
  if (mol.is_zero()) return Rational(0);
  const auto sides = detail::split_supports(mol);
  const std::size_t m = sides.sources.size();
  const std::size_t n = sides.sinks.size();
  if (m > 4 || n > 4) {
    fail("SupportTooLarge", "oracle supports at most 4 points per side, got " +
                                std::to_string(m) + "x" + std::to_string(n));
  }
  const auto cost = detail::transport_costs(*mol.space(), sides);

  const std::size_t cells = m * n;
  const std::size_t tree_edges = m + n - 1;
  std::vector<std::size_t> pick(tree_edges);
  for (std::size_t k = 0; k < tree_edges; ++k) pick[k] = k;

  std::optional<Rational> best;
  const auto consider = [&](const std::vector<std::size_t>& edges) {
    // Union-find spanning check over m+n nodes.
    std::vector<std::size_t> root(m + n);
    for (std::size_t v = 0; v < m + n; ++v) root[v] = v;
    const auto find = [&](std::size_t v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const std::size_t e : edges) {
      const std::size_t a = find(e / n), b = find(m + e % n);
      if (a == b) return;  // cycle: not a tree
      root[a] = b;
    }
    // Tree solve by leaf elimination. value > 0 means mass to ship out.
    std::vector<Rational> value(m + n);
    for (std::size_t i = 0; i < m; ++i) value[i] = sides.supply[i];
    for (std::size_t j = 0; j < n; ++j) value[m + j] = -sides.demand[j];
    std::vector<bool> edge_done(edges.size(), false);
    std::vector<int> degree(m + n, 0);
    for (const std::size_t e : edges) {
      ++degree[e / n];
      ++degree[m + e % n];
    }
    Rational total(0);
    bool feasible = true;
    for (std::size_t round = 0; round + 1 < m + n && feasible; ++round) {
      std::size_t leaf = m + n;
      for (std::size_t v = 0; v < m + n; ++v) {
        if (degree[v] == 1) {
          leaf = v;
          break;
        }
      }
      if (leaf == m + n) return;  // no leaf: disconnected remainder
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edge_done[k]) continue;
        const std::size_t i = edges[k] / n, j = edges[k] % n;
        if (i != leaf && m + j != leaf) continue;
        const Rational f = leaf < m ? value[i] : -value[m + j];
        if (f < 0) {
          feasible = false;
        } else {
          total += f * cost[i][j];
          const std::size_t other = leaf < m ? m + j : i;
          value[other] += value[leaf];
          value[leaf] = 0;
        }
        edge_done[k] = true;
        --degree[leaf];
        --degree[leaf < m ? m + j : i];
        break;
      }
    }
    if (feasible && (!best || total < *best)) best = total;
  };

  // All cell subsets of size m+n-1, in lexicographic order.
  while (true) {
    consider(pick);
    std::size_t k = tree_edges;
    while (k > 0 && pick[k - 1] == cells - tree_edges + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t l = k; l < tree_edges; ++l) pick[l] = pick[l - 1] + 1;
  }
  if (!best) throw InternalError("transportation polytope had no feasible vertex");
  return *best;
}

}  // namespace freelip
