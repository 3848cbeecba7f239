// routing.hpp — deterministic route discovery proxies.
//
// Four methods produce the initial path sets: single shortest path (AODV-like),
// iterated node-disjoint shortest paths (AOMDV-like), and both again over the
// MPR-restricted forwarding digraph (OLSR / MP-OLSR-like). All tie-breaking is
// by lexicographically smallest node-id sequence, so every method is a pure
// function of the network. Only adjacency is consulted; Network overloads are
// provided for convenience.
#pragma once

#include <vector>

#include "mra/paths.hpp"
#include "mra/topology.hpp"

namespace mra {

struct RoutingConfig {
  RoutingMethod method = RoutingMethod::Spa;
  std::size_t k_max = 1;  // K, upper bound on paths per pair
};

// The unique deterministic shortest path, or an empty set when disconnected.
PathSet spa_route(const Graph& g, NodeId i, NodeId j);

// Up to K pairwise internally-node-disjoint paths by iterated shortest-path
// extraction (interior nodes of each extracted path are removed), shortest
// first. K = 1 coincides with spa_route.
PathSet k_disjoint_routes(const Graph& g, NodeId i, NodeId j, std::size_t k);

// Multi-point relays of k: a greedily built subset M of N_k such that every
// strict 2-hop neighbor of k is adjacent to some member (largest uncovered
// coverage first, ties to the smallest id), pruned so no member is redundant.
std::vector<NodeId> mpr_select(const Graph& g, NodeId k);

// Shortest path(s) over the MPR forwarding digraph: arc u->v iff v is in
// mpr_select(u), plus every arc into the destination from its neighbors.
PathSet mpr_route(const Graph& g, NodeId i, NodeId j);
PathSet mpr_k_disjoint(const Graph& g, NodeId i, NodeId j, std::size_t k);

PathSet route(const Graph& g, const RoutingConfig& cfg, NodeId i, NodeId j);

inline PathSet spa_route(const Network& net, NodeId i, NodeId j) {
  return spa_route(net.graph, i, j);
}
inline PathSet k_disjoint_routes(const Network& net, NodeId i, NodeId j, std::size_t k) {
  return k_disjoint_routes(net.graph, i, j, k);
}
inline std::vector<NodeId> mpr_select(const Network& net, NodeId k) {
  return mpr_select(net.graph, k);
}
inline PathSet mpr_route(const Network& net, NodeId i, NodeId j) {
  return mpr_route(net.graph, i, j);
}
inline PathSet mpr_k_disjoint(const Network& net, NodeId i, NodeId j, std::size_t k) {
  return mpr_k_disjoint(net.graph, i, j, k);
}
inline PathSet route(const Network& net, const RoutingConfig& cfg, NodeId i, NodeId j) {
  return route(net.graph, cfg, i, j);
}

// K defaults: 5 for the disjoint method, 3 (delta <= 8) or 5 (delta > 8) for
// the MPR multi-path method, 1 for the single-path ones.
std::size_t default_k(RoutingMethod method, std::size_t delta);

}  // namespace mra
