#include "mra/refine.hpp"

#include <algorithm>

namespace mra {

PathSet enlarge_single(const PathSet& ps, const PathSet& routes_from_k) {
  if (ps.paths.size() != 1 || ps.paths[0].hop_count() < 2)
    throw InvalidArgument("enlarge_single: expects a single path of two or more links");
  const Path& original = ps.paths[0];
  const NodeId i = ps.origin;
  const NodeId k = original.nodes[1];
  if (routes_from_k.origin != k || routes_from_k.destination != ps.destination)
    throw InvalidArgument("enlarge_single: route source does not match the first hop");

  PathSet enlarged = ps;
  const std::size_t limit = original.hop_count();
  for (const Path& q : routes_from_k.paths) {
    if (q.nodes.size() < 2 || q.nodes.front() != k || q.nodes.back() != ps.destination) continue;
    if (std::find(q.nodes.begin(), q.nodes.end(), i) != q.nodes.end()) continue;  // revisits i
    Path prefixed;
    prefixed.nodes.reserve(q.nodes.size() + 1);
    prefixed.nodes.push_back(i);
    prefixed.nodes.insert(prefixed.nodes.end(), q.nodes.begin(), q.nodes.end());
    if (prefixed.hop_count() > limit) continue;  // weightier than the original
    if (std::find(enlarged.paths.begin(), enlarged.paths.end(), prefixed) != enlarged.paths.end())
      continue;
    enlarged.paths.push_back(std::move(prefixed));
  }
  return enlarged;
}

RefineOutcome refine_detailed(const Graph& g, const PathSet& ps, const RouteSource& routes) {
  RefineOutcome out;
  out.considered = ps;

  // A direct single-link path beats any arrangement.
  for (const Path& p : ps.paths)
    if (p.hop_count() == 1) {
      out.kind = RefineCase::Direct;
      out.refined = ps;
      out.refined.paths = {p};
      return out;
    }

  if (ps.paths.size() == 1) {  // single multi-link path: try enlargement
    const NodeId k = ps.paths[0].nodes[1];
    const PathSet from_k = routes ? routes(k, ps.destination)
                                  : PathSet{k, ps.destination, ps.method, ps.k_max, {}};
    out.considered = enlarge_single(ps, from_k);
    if (out.considered.paths.size() == 1) {  // enlargement impossible: problem is moot
      out.kind = RefineCase::Moot;
      out.refined = ps;
      return out;
    }
  }

  if (out.considered.paths.empty()) {
    out.kind = RefineCase::Moot;
    out.refined = ps;
    return out;
  }

  const NextMap nexts = next_sets(out.considered);
  const PairClassification pc = classify_pairs(g, out.considered, nexts);
  out.graph = build_conflict_graph(pc, out.considered);
  out.selected = mwis_solve(to_weighted_graph(*out.graph));
  out.kind = RefineCase::Solved;
  out.refined = out.considered;
  out.refined.paths.clear();
  for (const PathId id : out.selected) out.refined.paths.push_back(out.considered.paths[id]);
  return out;
}

PathSet refine(const Graph& g, const PathSet& ps, const RouteSource& routes) {
  return refine_detailed(g, ps, routes).refined;
}

}  // namespace mra
