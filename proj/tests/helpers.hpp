// helpers.hpp — test fixtures and independent oracles.
//
// The oracles here deliberately avoid the library's solving paths: MWIS by
// subset enumeration, disjoint path families and 2-hop covers by exhaustive
// search. Expected values frozen in the tests come from these.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "mra/mwis.hpp"
#include "mra/paths.hpp"
#include "mra/rng.hpp"
#include "mra/topology.hpp"

namespace testutil {

// Network with explicit geometry; adjacency follows from positions and radius.
// Degree/spacing invariants are not enforced on these lab specimens.
inline mra::Network network_from_points(std::vector<mra::Point> positions, double radius) {
  mra::Network net;
  net.n = positions.size();
  net.delta = positions.size();
  net.side = 10000.0;
  net.radius = radius;
  net.seed = 0;
  net.positions = std::move(positions);
  net.graph = mra::Graph(net.n);
  const double r2 = radius * radius;
  for (mra::NodeId u = 0; u < net.n; ++u)
    for (mra::NodeId v = u + 1; v < net.n; ++v)
      if (mra::squared_distance(net.positions[u], net.positions[v]) <= r2)
        net.graph.add_edge(u, v);
  return net;
}

// Exhaustive MWIS oracle: enumerate all subsets (order <= 20 or so).
struct BruteForceResult {
  mra::Rational weight{0};
  std::vector<std::uint32_t> vertices;  // lexicographically smallest optimum
};

inline BruteForceResult brute_force_mwis(const mra::WeightedGraph& g) {
  std::vector<std::uint64_t> adj(g.order, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }
  BruteForceResult best;
  bool have = false;
  const std::uint64_t all = (1ULL << g.order) - 1;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    bool independent = true;
    mra::Rational weight{0};
    for (std::uint64_t m = mask; m && independent;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (adj[v] & mask) independent = false;
      else weight += g.weights[v];
    }
    if (!independent) continue;
    std::vector<std::uint32_t> verts;
    for (std::uint64_t m = mask; m;) {
      verts.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
      m &= m - 1;
    }
    if (!have || best.weight < weight ||
        (weight == best.weight &&
         std::lexicographical_compare(verts.begin(), verts.end(), best.vertices.begin(),
                                      best.vertices.end()))) {
      best.weight = weight;
      best.vertices = verts;
      have = true;
    }
  }
  return best;
}

// All simple i-to-j paths of an adjacency structure (tiny graphs only).
inline void all_simple_paths_rec(const mra::Graph& g, mra::NodeId cur, mra::NodeId j,
                                 std::vector<mra::NodeId>& stack, std::set<mra::NodeId>& used,
                                 std::vector<std::vector<mra::NodeId>>& out) {
  if (cur == j) {
    out.push_back(stack);
    return;
  }
  for (const mra::NodeId next : g.neighbors(cur)) {
    if (used.count(next)) continue;
    used.insert(next);
    stack.push_back(next);
    all_simple_paths_rec(g, next, j, stack, used, out);
    stack.pop_back();
    used.erase(next);
  }
}

inline std::vector<std::vector<mra::NodeId>> all_simple_paths(const mra::Graph& g, mra::NodeId i,
                                                              mra::NodeId j) {
  std::vector<std::vector<mra::NodeId>> out;
  std::vector<mra::NodeId> stack{i};
  std::set<mra::NodeId> used{i};
  all_simple_paths_rec(g, i, j, stack, used, out);
  return out;
}

// Largest family of pairwise internally-node-disjoint i-to-j paths, by
// exhaustive subset search over all simple paths.
inline std::size_t max_disjoint_family(const mra::Graph& g, mra::NodeId i, mra::NodeId j) {
  const auto paths = all_simple_paths(g, i, j);
  const auto interior = [&](std::size_t p) {
    std::set<mra::NodeId> s(paths[p].begin() + 1, paths[p].end() - 1);
    return s;
  };
  std::size_t best = 0;
  const std::uint64_t all = (1ULL << paths.size()) - 1;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    std::set<mra::NodeId> seen;
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t p = 0; p < paths.size() && ok; ++p) {
      if (!(mask & (1ULL << p))) continue;
      ++count;
      for (const mra::NodeId u : interior(p))
        if (!seen.insert(u).second) ok = false;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

// Minimum cover of the strict 2-hop neighborhood of k by neighbors of k,
// by exhaustive subset search.
inline std::size_t min_two_hop_cover(const mra::Graph& g, mra::NodeId k) {
  const auto nk = g.neighbors(k);
  std::set<mra::NodeId> two_hop;
  for (const mra::NodeId v : nk)
    for (const mra::NodeId w : g.neighbors(v))
      if (w != k && !g.are_adjacent(k, w)) two_hop.insert(w);
  if (two_hop.empty()) return 0;
  std::size_t best = nk.size();
  const std::uint64_t all = (1ULL << nk.size()) - 1;
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    std::set<mra::NodeId> covered;
    for (std::size_t t = 0; t < nk.size(); ++t)
      if (mask & (1ULL << t)) {
        const auto nb = g.neighbors(nk[t]);
        covered.insert(nb.begin(), nb.end());
      }
    if (std::includes(covered.begin(), covered.end(), two_hop.begin(), two_hop.end()))
      best = std::min<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

inline mra::Graph graph_from_edges(std::size_t order,
                                   std::vector<std::pair<mra::NodeId, mra::NodeId>> edges) {
  mra::Graph g(order);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline mra::PathSet make_path_set(mra::NodeId origin, mra::NodeId destination,
                                  std::vector<std::vector<mra::NodeId>> node_lists) {
  mra::PathSet ps;
  ps.origin = origin;
  ps.destination = destination;
  for (auto& nodes : node_lists) ps.paths.push_back({std::move(nodes)});
  return ps;
}

// Seeded random weighted graph for the oracle-equivalence suite.
inline mra::WeightedGraph random_weighted_graph(std::uint64_t seed, std::size_t order,
                                                double edge_probability) {
  mra::Rng rng(seed);
  mra::WeightedGraph g;
  g.order = order;
  for (std::uint32_t u = 0; u < order; ++u)
    for (std::uint32_t v = u + 1; v < order; ++v)
      if (rng.next_unit() < edge_probability) g.edges.emplace_back(u, v);
  for (std::uint32_t u = 0; u < order; ++u)
    g.weights.emplace_back(1 + static_cast<std::int64_t>(rng.next_below(12)),
                           1 + static_cast<std::int64_t>(rng.next_below(7)));
  return g;
}

}  // namespace testutil
