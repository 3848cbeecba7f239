// refine.hpp — prune a path set to locally non-interfering paths.
//
// Decision procedure per origin-destination pair: a direct single-link path
// wins outright; a lone multi-link path is first enlarged with suitably
// prefixed paths of its first hop (or left alone when enlargement adds
// nothing); otherwise the conflict graph is built and a maximum weighted
// independent set, weights 1/C_p, picks the surviving paths.
#pragma once

#include <functional>
#include <optional>

#include "mra/conflict.hpp"
#include "mra/paths.hpp"
#include "mra/topology.hpp"

namespace mra {

// Supplies 𝒫_kj on demand for enlargement (same routing method, same network).
using RouteSource = std::function<PathSet(NodeId origin, NodeId destination)>;

enum class RefineCase {
  Direct,  // the direct i-j link was present
  Moot,    // single multi-link path, enlargement impossible
  Solved,  // conflict graph + MWIS ran
};

struct RefineOutcome {
  RefineCase kind = RefineCase::Solved;
  PathSet refined;
  PathSet considered;                  // input after any enlargement
  std::optional<ConflictGraph> graph;  // present iff kind == Solved
  std::vector<PathId> selected;        // indices into considered, sorted
};

// ps plus every path of routes_from_k prefixed by the origin that does not
// revisit the origin, is no duplicate, and is no weightier (prefixed hop count
// <= the original's). May return ps unchanged.
PathSet enlarge_single(const PathSet& ps, const PathSet& routes_from_k);

// The classification only ever looks at the origin's neighborhood, so plain
// adjacency is all the refinement needs.
RefineOutcome refine_detailed(const Graph& g, const PathSet& ps, const RouteSource& routes);

PathSet refine(const Graph& g, const PathSet& ps, const RouteSource& routes);

inline RefineOutcome refine_detailed(const Network& net, const PathSet& ps,
                                     const RouteSource& routes) {
  return refine_detailed(net.graph, ps, routes);
}

inline PathSet refine(const Network& net, const PathSet& ps, const RouteSource& routes) {
  return refine(net.graph, ps, routes);
}

}  // namespace mra
