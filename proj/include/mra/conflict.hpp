// conflict.hpp — local interference classification and the per-pair conflict graph.
//
// For a path set from i to j, the origin can learn, without leaving its
// neighborhood, which neighboring node pairs carry or flank its paths:
//
//   type A — a pair lying consecutively on some path, with the upstream node a
//            neighbor of i; it carries Paths(k,k'), the paths it belongs to.
//   type B — a neighboring pair on different paths (no path contains both),
//            with one member in N_i and the other in N_i or in some Next_l for
//            l in N_i.
//
// The conflict graph has one node per path plus one temporary node per type-B
// pair. Classified pairs sharing a network node connect their node groups, a
// type-A pair with two or more paths connects those paths to each other, a
// single distance-2 closure pass runs over the result, and the temporary nodes
// are then deleted. Node weights are 1/C_p, kept as exact rationals.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mra/mwis.hpp"
#include "mra/paths.hpp"
#include "mra/rational.hpp"

namespace mra {

struct TypeAPair {
  NodeId k = 0;
  NodeId k2 = 0;                // stored with k < k2
  std::vector<PathId> paths;    // Paths(k,k'), sorted
};

struct TypeBPair {
  NodeId k = 0;
  NodeId k2 = 0;  // stored with k < k2
};

struct PairClassification {
  std::vector<TypeAPair> type_a;  // sorted by (k, k2)
  std::vector<TypeBPair> type_b;  // sorted by (k, k2)
};

struct ConflictGraph {
  std::size_t path_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // final, path nodes only
  std::vector<Rational> weights;                               // 1/C_p per path
  std::size_t temp_nodes_created = 0;  // one per type-B pair; none survive finalization
};

// Classifies the locally visible pairs. GraphT needs only neighbors(NodeId);
// the only nodes ever queried are i and members of N_i, which tests enforce
// with an access-auditing wrapper. Requires nexts == next_sets(ps).
template <class GraphT>
PairClassification classify_pairs(const GraphT& g, const PathSet& ps, const NextMap& nexts) {
  PairClassification out;
  const NodeId i = ps.origin;

  const auto ni_span = g.neighbors(i);
  const std::set<NodeId> ni(ni_span.begin(), ni_span.end());

  // Type A: scan arcs; an arc (u,v) with u in N_i qualifies the unordered pair
  // {u,v} (v is in Next_u by construction). Paths(k,k') then collects every
  // path holding the pair consecutively in either direction.
  std::set<std::pair<NodeId, NodeId>> qualified;
  for (const Path& p : ps.paths)
    for (std::size_t h = 0; h + 1 < p.nodes.size(); ++h) {
      const NodeId u = p.nodes[h], v = p.nodes[h + 1];
      if (ni.count(u)) qualified.insert(std::minmax(u, v));
    }
  std::map<std::pair<NodeId, NodeId>, std::vector<PathId>> type_a_paths;
  for (PathId id = 0; id < ps.paths.size(); ++id) {
    const auto& nodes = ps.paths[id].nodes;
    for (std::size_t h = 0; h + 1 < nodes.size(); ++h) {
      const auto key = std::minmax(nodes[h], nodes[h + 1]);
      if (!qualified.count(key)) continue;
      auto& list = type_a_paths[key];
      if (list.empty() || list.back() != id) list.push_back(id);
    }
  }
  for (auto& [key, paths] : type_a_paths)
    out.type_a.push_back({key.first, key.second, std::move(paths)});

  // Type B: membership bookkeeping first.
  std::map<NodeId, std::set<PathId>> on_paths;
  for (PathId id = 0; id < ps.paths.size(); ++id)
    for (const NodeId u : ps.paths[id].nodes) on_paths[u].insert(id);

  std::set<NodeId> visible = ni;  // N_i plus every Next_l(i,j) for l in N_i
  for (const NodeId l : ni) {
    const auto it = nexts.find(l);
    if (it != nexts.end()) visible.insert(it->second.begin(), it->second.end());
  }

  std::set<std::pair<NodeId, NodeId>> type_b_keys;
  for (const NodeId u : ni) {
    const auto mem_u = on_paths.find(u);
    if (mem_u == on_paths.end()) continue;
    for (const NodeId v : g.neighbors(u)) {
      if (v == i || !visible.count(v)) continue;
      const auto mem_v = on_paths.find(v);
      if (mem_v == on_paths.end()) continue;
      const bool share = std::ranges::any_of(
          mem_u->second, [&](PathId id) { return mem_v->second.count(id) != 0; });
      if (share) continue;
      const auto key = std::minmax(u, v);
      assert(!qualified.count(key));  // a shared arc implies a shared path
      type_b_keys.insert(key);
    }
  }
  for (const auto& [k, k2] : type_b_keys) out.type_b.push_back({k, k2});
  return out;
}

// Runs the construction steps above and returns the finalized graph. Throws
// InconsistencyError if the classification references a path id not in ps.
ConflictGraph build_conflict_graph(const PairClassification& pc, const PathSet& ps);

// Adjacency listing plus weights, for golden-file comparison.
std::string dump_conflict_graph(const ConflictGraph& g);

WeightedGraph to_weighted_graph(const ConflictGraph& g);

}  // namespace mra
