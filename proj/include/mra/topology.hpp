// topology.hpp — random unit-disk mesh generation.
//
// Networks are n nodes in a square of side 1500 with node 0 at the center,
// pairwise spacing >= 25, degree capped at delta, communication radius
// R = 200*sqrt(20*delta/n). Two nodes are neighbors iff their Euclidean
// distance is <= R (communication radius == interference radius).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mra/graph.hpp"

namespace mra {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

struct GenerationConfig {
  std::size_t n = 0;
  std::size_t delta = 0;
  double side = 1500.0;
  std::size_t max_attempts = 1000;  // consecutive rejections before a restart
  std::size_t max_restarts = 100;   // whole-network restarts before giving up
  std::uint64_t seed = 0;
};

struct Network {
  std::size_t n = 0;
  std::size_t delta = 0;
  double side = 1500.0;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::vector<Point> positions;
  Graph graph;  // adjacency derived from positions and radius

  std::span<const NodeId> neighbors(NodeId u) const { return graph.neighbors(u); }
  std::size_t degree(NodeId u) const { return graph.degree(u); }
};

// R = 200*sqrt(20*delta/n); R=200 at n=80, delta=4.
double comm_radius(std::size_t n, std::size_t delta);

// Seeded rejection-sampling placement. Node 0 at the center; each further node
// must keep spacing >= 25, gain at least one neighbor, and leave every degree
// <= delta. max_attempts consecutive rejections discard the partial network and
// restart on the next placement sub-stream; max_restarts exhausted throws
// GenerationFailure. Pure function of the config.
Network generate_network(const GenerationConfig& cfg);

// True iff u != v and distance(u, v) <= R (inclusive at the boundary).
bool are_neighbors(const Network& net, NodeId u, NodeId v);

// Full invariant audit: degree bounds, spacing, center placement, and the
// adjacency <=> distance rule. Returns human-readable violations, empty if ok.
std::vector<std::string> audit_network(const Network& net);

// Versioned JSON round-trip. Adjacency is recomputed from positions on load;
// the loader runs the audit and rejects inconsistent documents.
std::string network_to_json(const Network& net);
Network network_from_json(const std::string& text);

}  // namespace mra
