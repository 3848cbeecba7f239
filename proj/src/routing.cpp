#include "mra/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace mra {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Directed adjacency with sorted arc lists. Undirected routing uses symmetric
// arcs; the MPR digraph is genuinely directed.
struct Digraph {
  std::vector<std::vector<NodeId>> out;
  std::vector<std::vector<NodeId>> in;
};

Digraph symmetric_digraph(const Graph& g) {
  Digraph d;
  d.out.resize(g.order());
  for (NodeId u = 0; u < g.order(); ++u) {
    const auto nb = g.neighbors(u);
    d.out[u].assign(nb.begin(), nb.end());
  }
  d.in = d.out;
  return d;
}

// Lexicographically smallest shortest path from i to j among active nodes, or
// an empty path when disconnected. Endpoints are always treated as active.
Path shortest_path_lex(const Digraph& g, NodeId i, NodeId j, const std::vector<char>& active) {
  std::vector<std::uint32_t> dist(g.out.size(), kUnreached);
  std::deque<NodeId> queue;
  dist[j] = 0;
  queue.push_back(j);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const NodeId v : g.in[u]) {
      if (dist[v] != kUnreached) continue;
      if (!active[v] && v != i) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  if (dist[i] == kUnreached) return {};

  // Walking toward j picking the smallest admissible id at each step yields
  // the lexicographically smallest node sequence among shortest paths.
  Path p;
  p.nodes.push_back(i);
  NodeId cur = i;
  while (cur != j) {
    for (const NodeId v : g.out[cur]) {
      if ((active[v] || v == j) && dist[v] == dist[cur] - 1) {
        p.nodes.push_back(v);
        cur = v;
        break;
      }
    }
  }
  return p;
}

std::vector<Path> extract_disjoint(Digraph g, NodeId i, NodeId j, std::size_t k) {
  std::vector<char> active(g.out.size(), 1);
  std::vector<Path> paths;
  while (paths.size() < k) {
    Path p = shortest_path_lex(g, i, j, active);
    if (p.nodes.empty()) break;
    if (p.nodes.size() == 2) {
      // The direct link has no interior to remove; drop the arc itself so the
      // extraction makes progress.
      std::erase(g.out[i], j);
      std::erase(g.in[j], i);
    } else {
      for (std::size_t h = 1; h + 1 < p.nodes.size(); ++h) active[p.nodes[h]] = 0;
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

void check_pair(const Graph& g, NodeId i, NodeId j) {
  if (i >= g.order() || j >= g.order()) throw InvalidArgument("route: node id out of range");
  if (i == j) throw InvalidArgument("route: origin equals destination");
}

Digraph mpr_digraph(const Graph& g, NodeId j) {
  Digraph d;
  d.out.resize(g.order());
  d.in.resize(g.order());
  for (NodeId u = 0; u < g.order(); ++u) {
    const auto relays = mpr_select(g, u);
    for (const NodeId v : g.neighbors(u))
      if (v == j || std::binary_search(relays.begin(), relays.end(), v)) d.out[u].push_back(v);
  }
  for (NodeId u = 0; u < g.order(); ++u)
    for (const NodeId v : d.out[u]) d.in[v].push_back(u);
  for (auto& list : d.in) std::sort(list.begin(), list.end());
  return d;
}

PathSet make_set(NodeId i, NodeId j, RoutingMethod m, std::size_t k, std::vector<Path> paths) {
  PathSet ps;
  ps.origin = i;
  ps.destination = j;
  ps.method = m;
  ps.k_max = k;
  ps.paths = std::move(paths);
  return ps;
}

}  // namespace

PathSet spa_route(const Graph& g, NodeId i, NodeId j) {
  check_pair(g, i, j);
  const Digraph d = symmetric_digraph(g);
  std::vector<char> active(g.order(), 1);
  Path p = shortest_path_lex(d, i, j, active);
  std::vector<Path> paths;
  if (!p.nodes.empty()) paths.push_back(std::move(p));
  return make_set(i, j, RoutingMethod::Spa, 1, std::move(paths));
}

PathSet k_disjoint_routes(const Graph& g, NodeId i, NodeId j, std::size_t k) {
  check_pair(g, i, j);
  if (k < 1) throw InvalidArgument("k_disjoint_routes: K must be >= 1");
  return make_set(i, j, RoutingMethod::KDisjoint, k, extract_disjoint(symmetric_digraph(g), i, j, k));
}

std::vector<NodeId> mpr_select(const Graph& g, NodeId k) {
  if (k >= g.order()) throw InvalidArgument("mpr_select: node id out of range");
  const auto nk = g.neighbors(k);
  std::set<NodeId> two_hop;
  for (const NodeId v : nk)
    for (const NodeId w : g.neighbors(v))
      if (w != k && !g.are_adjacent(k, w)) two_hop.insert(w);
  if (two_hop.empty()) return {};

  std::set<NodeId> uncovered = two_hop;
  std::vector<NodeId> selected;
  while (!uncovered.empty()) {
    NodeId best = 0;
    std::size_t best_cover = 0;
    for (const NodeId v : nk) {
      if (std::find(selected.begin(), selected.end(), v) != selected.end()) continue;
      std::size_t cover = 0;
      for (const NodeId w : g.neighbors(v)) cover += uncovered.count(w);
      if (cover > best_cover) {  // ties keep the earlier (smaller) id
        best_cover = cover;
        best = v;
      }
    }
    if (best_cover == 0) break;  // unreachable: every 2-hop neighbor has a 1-hop cover
    selected.push_back(best);
    for (const NodeId w : g.neighbors(best)) uncovered.erase(w);
  }
  std::sort(selected.begin(), selected.end());

  // Drop members whose whole contribution is covered by the rest.
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::size_t a = 0; a < selected.size(); ++a) {
      std::set<NodeId> others;
      for (std::size_t b = 0; b < selected.size(); ++b)
        if (b != a)
          for (const NodeId w : g.neighbors(selected[b])) others.insert(w);
      bool redundant = true;
      for (const NodeId w : g.neighbors(selected[a]))
        if (two_hop.count(w) && !others.count(w)) {
          redundant = false;
          break;
        }
      if (redundant) {
        selected.erase(selected.begin() + a);
        pruned = true;
        break;
      }
    }
  }
  return selected;
}

PathSet mpr_route(const Graph& g, NodeId i, NodeId j) {
  check_pair(g, i, j);
  const Digraph d = mpr_digraph(g, j);
  std::vector<char> active(g.order(), 1);
  Path p = shortest_path_lex(d, i, j, active);
  std::vector<Path> paths;
  if (!p.nodes.empty()) paths.push_back(std::move(p));
  return make_set(i, j, RoutingMethod::MprSpa, 1, std::move(paths));
}

PathSet mpr_k_disjoint(const Graph& g, NodeId i, NodeId j, std::size_t k) {
  check_pair(g, i, j);
  if (k < 1) throw InvalidArgument("mpr_k_disjoint: K must be >= 1");
  return make_set(i, j, RoutingMethod::MprKDisjoint, k, extract_disjoint(mpr_digraph(g, j), i, j, k));
}

PathSet route(const Graph& g, const RoutingConfig& cfg, NodeId i, NodeId j) {
  switch (cfg.method) {
    case RoutingMethod::Spa: return spa_route(g, i, j);
    case RoutingMethod::KDisjoint: return k_disjoint_routes(g, i, j, cfg.k_max);
    case RoutingMethod::MprSpa: return mpr_route(g, i, j);
    case RoutingMethod::MprKDisjoint: return mpr_k_disjoint(g, i, j, cfg.k_max);
  }
  throw InvalidArgument("route: unknown method");
}

std::size_t default_k(RoutingMethod method, std::size_t delta) {
  switch (method) {
    case RoutingMethod::Spa:
    case RoutingMethod::MprSpa: return 1;
    case RoutingMethod::KDisjoint: return 5;
    case RoutingMethod::MprKDisjoint: return delta <= 8 ? 3 : 5;
  }
  throw InvalidArgument("default_k: unknown method");
}

}  // namespace mra
