// paths.hpp — i-to-j paths, path sets, and per-node forwarding sets.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mra/graph.hpp"
#include "mra/topology.hpp"

namespace mra {

using PathId = std::uint32_t;

enum class RoutingMethod { Spa, KDisjoint, MprSpa, MprKDisjoint };

std::string to_string(RoutingMethod m);
RoutingMethod routing_method_from_string(const std::string& name);

struct Path {
  std::vector<NodeId> nodes;  // first = origin, last = destination

  std::size_t hop_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }

  friend bool operator==(const Path& a, const Path& b) { return a.nodes == b.nodes; }
  friend bool operator<(const Path& a, const Path& b) { return a.nodes < b.nodes; }
};

struct PathSet {
  NodeId origin = 0;
  NodeId destination = 0;
  RoutingMethod method = RoutingMethod::Spa;
  std::size_t k_max = 1;
  std::vector<Path> paths;  // PathId = index into this list

  bool empty() const { return paths.empty(); }
  std::size_t size() const { return paths.size(); }
};

// Next_k(i,j): node -> set of neighbors it forwards to on some path of the set.
using NextMap = std::map<NodeId, std::vector<NodeId>>;

// Derived purely from consecutive pairs of the paths; m is in nexts[k] iff
// some path contains the arc (k, m).
NextMap next_sets(const PathSet& ps);

// Path/PathSet structural checks against a network: endpoints match, every
// consecutive pair is a neighbor, no repeated node, no duplicate sequence.
std::vector<std::string> audit_path_set(const Network& net, const PathSet& ps);

std::string path_set_to_json(const PathSet& ps);
PathSet path_set_from_json(const std::string& text);

}  // namespace mra
