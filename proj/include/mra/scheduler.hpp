// scheduler.hpp — slotted TDMA evaluation of active path sets.
//
// Greedy maximal-independent-set, longest-queue-first link activation under
// the protocol interference model. Every output produced from this scheduler
// is labeled scheduler=greedy-tdma in run metadata.
//
// Per slot: origins inject one packet per path while the first queue is below
// queue_cap (interior queues are uncapped, so forwarding never drops); the
// nonempty per-path hop queues are sorted by (queue length desc, hops to
// destination asc, link index asc, path asc) and greedily granted their link
// when it does not conflict with the links already granted; each granted link
// moves one packet one hop. Deliveries after the warm-up window count toward
// the per-path totals.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "mra/paths.hpp"
#include "mra/topology.hpp"

namespace mra {

struct DirectedLink {
  NodeId tx = 0;
  NodeId rx = 0;

  friend bool operator==(const DirectedLink& a, const DirectedLink& b) {
    return a.tx == b.tx && a.rx == b.rx;
  }
  friend bool operator<(const DirectedLink& a, const DirectedLink& b) {
    return a.tx != b.tx ? a.tx < b.tx : a.rx < b.rx;
  }
};

struct LinkConflictGraph {
  std::vector<DirectedLink> links;  // deduplicated, in order of first appearance
  std::vector<std::pair<std::uint32_t, std::uint32_t>> conflicts;  // unordered index pairs
};

struct SimConfig {
  std::uint64_t total_slots = 67500;
  std::uint64_t warmup_slots = 7500;
  std::uint32_t injection_per_slot = 1;  // packets per path per slot
  std::uint64_t queue_cap = 50;          // origin queue bound; drops happen only here
  double slot_seconds = 0.002;           // reporting conversion only, never simulation logic
};

struct TrafficStats {
  struct PathKey {
    NodeId origin = 0;
    NodeId destination = 0;
    std::uint32_t set_index = 0;   // position in the `active` argument
    std::uint32_t path_index = 0;  // PathId within that set
  };
  std::vector<PathKey> keys;             // flattened path order
  std::vector<std::uint64_t> per_path;   // x_p, aligned with keys
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> per_od;  // x_ij = sum of the pair's x_p
  std::uint64_t measured_slots = 0;
  std::uint64_t injected = 0;   // accepted injections (drops excluded)
  std::uint64_t delivered = 0;  // all deliveries, warm-up included
  std::uint64_t drops = 0;      // injections refused at a full origin queue
};

// One link per distinct consecutive node pair across the paths. Two links
// conflict iff they share a node or an endpoint of one neighbors an endpoint
// of the other.
LinkConflictGraph link_conflict_graph(const Network& net, const std::vector<Path>& paths);

// Called once per slot with the granted link indices, ascending.
using SlotObserver = std::function<void(std::uint64_t slot, std::span<const std::uint32_t> links)>;

// Deterministic for fixed inputs; the seed is reserved for randomized policies
// and recorded in run metadata, the greedy policy never consumes it.
TrafficStats simulate_tdma(const Network& net, const std::vector<PathSet>& active,
                           const SimConfig& cfg, std::uint64_t seed,
                           const SlotObserver& observer = {});

}  // namespace mra
