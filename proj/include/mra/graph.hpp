// graph.hpp — plain undirected adjacency with sorted neighbor lists.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "mra/errors.hpp"

namespace mra {

using NodeId = std::uint32_t;

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : adj_(order) {}

  std::size_t order() const { return adj_.size(); }

  void add_edge(NodeId u, NodeId v) {
    check(u);
    check(v);
    if (u == v) throw InvalidArgument("Graph: self-loop");
    insert(adj_[u], v);
    insert(adj_[v], u);
  }

  std::span<const NodeId> neighbors(NodeId u) const {
    check(u);
    return adj_[u];
  }

  std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  bool are_adjacent(NodeId u, NodeId v) const {
    check(u);
    check(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

 private:
  void check(NodeId u) const {
    if (u >= adj_.size()) throw InvalidArgument("Graph: node id out of range");
  }

  static void insert(std::vector<NodeId>& list, NodeId v) {
    const auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  }

  std::vector<std::vector<NodeId>> adj_;
};

}  // namespace mra
