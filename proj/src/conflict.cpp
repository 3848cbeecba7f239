#include "mra/conflict.hpp"

namespace mra {

namespace {

struct NodeGroup {
  NodeId k, k2;
  std::vector<std::uint32_t> members;  // conflict-graph node ids
};

}  // namespace

ConflictGraph build_conflict_graph(const PairClassification& pc, const PathSet& ps) {
  const std::size_t m = ps.paths.size();
  for (const TypeAPair& a : pc.type_a) {
    if (a.paths.empty()) throw InconsistencyError("conflict graph: type-A pair without paths");
    for (const PathId id : a.paths)
      if (id >= m) throw InconsistencyError("conflict graph: path id not in the path set");
  }

  // Step (1): one node per path, one temporary node per type-B pair.
  const std::size_t order = m + pc.type_b.size();
  std::vector<NodeGroup> groups;
  groups.reserve(pc.type_a.size() + pc.type_b.size());
  for (const TypeAPair& a : pc.type_a) {
    std::vector<std::uint32_t> members(a.paths.begin(), a.paths.end());
    groups.push_back({a.k, a.k2, std::move(members)});
  }
  for (std::size_t b = 0; b < pc.type_b.size(); ++b)
    groups.push_back({pc.type_b[b].k, pc.type_b[b].k2,
                      {static_cast<std::uint32_t>(m + b)}});

  std::vector<std::set<std::uint32_t>> adj(order);
  const auto connect = [&adj](std::uint32_t a, std::uint32_t b) {
    if (a == b) return;  // self-loops discarded
    adj[a].insert(b);
    adj[b].insert(a);
  };

  // Step (2).i: node coincidence among classified pairs. A pair whose group
  // has two or more members also counts against itself.
  for (std::size_t p = 0; p < groups.size(); ++p) {
    for (std::size_t q = p + 1; q < groups.size(); ++q) {
      const NodeGroup& gp = groups[p];
      const NodeGroup& gq = groups[q];
      const bool touch = gp.k == gq.k || gp.k == gq.k2 || gp.k2 == gq.k || gp.k2 == gq.k2;
      if (!touch) continue;
      for (const std::uint32_t a : gp.members)
        for (const std::uint32_t b : gq.members) connect(a, b);
    }
    const auto& members = groups[p].members;
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) connect(members[x], members[y]);
  }

  // Step (2).ii: one distance-2 closure pass, computed on the graph as it
  // stands now and applied all at once.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> closure;
  for (std::uint32_t u = 0; u < order; ++u)
    for (std::uint32_t w = u + 1; w < order; ++w) {
      if (adj[u].count(w)) continue;
      const bool linked = std::ranges::any_of(adj[u], [&](std::uint32_t mid) {
        return adj[mid].count(w) != 0;
      });
      if (linked) closure.emplace_back(u, w);
    }
  for (const auto& [u, w] : closure) connect(u, w);

  // Step (2).iii: drop the temporary nodes and everything touching them.
  ConflictGraph out;
  out.path_count = m;
  out.temp_nodes_created = pc.type_b.size();
  for (std::uint32_t u = 0; u < m; ++u)
    for (const std::uint32_t v : adj[u])
      if (v < m && u < v) out.edges.emplace_back(u, v);
  std::sort(out.edges.begin(), out.edges.end());
  out.weights.reserve(m);
  for (const Path& p : ps.paths) {
    if (p.hop_count() == 0) throw InconsistencyError("conflict graph: zero-hop path");
    out.weights.emplace_back(1, static_cast<std::int64_t>(p.hop_count()));
  }
  return out;
}

std::string dump_conflict_graph(const ConflictGraph& g) {
  std::string out;
  out += "nodes " + std::to_string(g.path_count) + "\n";
  for (std::uint32_t u = 0; u < g.path_count; ++u)
    out += "weight " + std::to_string(u) + " " + g.weights[u].str() + "\n";
  for (const auto& [u, v] : g.edges)
    out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

WeightedGraph to_weighted_graph(const ConflictGraph& g) {
  WeightedGraph wg;
  wg.order = g.path_count;
  wg.edges = g.edges;
  wg.weights = g.weights;
  return wg;
}

}  // namespace mra
