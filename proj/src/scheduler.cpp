#include "mra/scheduler.hpp"

#include <algorithm>
#include <map>

namespace mra {

namespace {

bool links_conflict(const Network& net, const DirectedLink& a, const DirectedLink& b) {
  const NodeId ea[2] = {a.tx, a.rx};
  const NodeId eb[2] = {b.tx, b.rx};
  for (const NodeId u : ea)
    for (const NodeId v : eb)
      if (u == v || net.graph.are_adjacent(u, v)) return true;
  return false;
}

}  // namespace

LinkConflictGraph link_conflict_graph(const Network& net, const std::vector<Path>& paths) {
  LinkConflictGraph g;
  std::map<DirectedLink, std::uint32_t> index;
  for (const Path& p : paths)
    for (std::size_t h = 0; h + 1 < p.nodes.size(); ++h) {
      const DirectedLink link{p.nodes[h], p.nodes[h + 1]};
      if (link.tx >= net.n || link.rx >= net.n || link.tx == link.rx ||
          !net.graph.are_adjacent(link.tx, link.rx))
        throw InvalidArgument("link_conflict_graph: path hop is not a network link");
      if (index.emplace(link, static_cast<std::uint32_t>(g.links.size())).second)
        g.links.push_back(link);
    }
  for (std::uint32_t a = 0; a < g.links.size(); ++a)
    for (std::uint32_t b = a + 1; b < g.links.size(); ++b)
      if (links_conflict(net, g.links[a], g.links[b])) g.conflicts.emplace_back(a, b);
  return g;
}

TrafficStats simulate_tdma(const Network& net, const std::vector<PathSet>& active,
                           const SimConfig& cfg, std::uint64_t /*seed*/,
                           const SlotObserver& observer) {
  if (cfg.warmup_slots >= cfg.total_slots)
    throw InvalidArgument("simulate_tdma: warmup_slots must be below total_slots");
  if (cfg.injection_per_slot < 1)
    throw InvalidArgument("simulate_tdma: injection_per_slot must be >= 1");

  TrafficStats stats;
  stats.measured_slots = cfg.total_slots - cfg.warmup_slots;

  std::vector<const Path*> flat;
  for (std::uint32_t s = 0; s < active.size(); ++s)
    for (std::uint32_t p = 0; p < active[s].paths.size(); ++p) {
      flat.push_back(&active[s].paths[p]);
      stats.keys.push_back({active[s].origin, active[s].destination, s, p});
    }
  stats.per_path.assign(flat.size(), 0);
  if (flat.empty()) {
    for (std::uint64_t slot = 0; slot < cfg.total_slots; ++slot)
      if (observer) observer(slot, {});
    return stats;
  }

  std::vector<Path> path_values;
  path_values.reserve(flat.size());
  for (const Path* p : flat) path_values.push_back(*p);
  const LinkConflictGraph lcg = link_conflict_graph(net, path_values);

  const std::size_t link_count = lcg.links.size();
  const std::size_t words = (link_count + 63) / 64;
  std::vector<std::uint64_t> conflict_bits(link_count * words, 0);
  for (const auto& [a, b] : lcg.conflicts) {
    conflict_bits[a * words + b / 64] |= 1ULL << (b % 64);
    conflict_bits[b * words + a / 64] |= 1ULL << (a % 64);
  }

  // One transmission demand per (path, hop); demands on the same physical link
  // exclude each other within a slot.
  struct Demand {
    std::uint32_t path;
    std::uint32_t hop;
    std::uint32_t link;
    std::uint32_t hops_left;
  };
  std::vector<Demand> demands;
  std::map<DirectedLink, std::uint32_t> link_index;
  for (std::uint32_t l = 0; l < lcg.links.size(); ++l) link_index[lcg.links[l]] = l;
  std::vector<std::vector<std::uint64_t>> queues(flat.size());
  for (std::uint32_t p = 0; p < flat.size(); ++p) {
    const auto& nodes = flat[p]->nodes;
    const std::uint32_t hops = static_cast<std::uint32_t>(nodes.size() - 1);
    queues[p].assign(hops, 0);
    for (std::uint32_t h = 0; h < hops; ++h)
      demands.push_back({p, h, link_index.at({nodes[h], nodes[h + 1]}), hops - h});
  }

  struct Candidate {
    std::uint64_t queue_len;
    std::uint32_t hops_left;
    std::uint32_t link;
    std::uint32_t path;
    std::uint32_t hop;
  };
  std::vector<Candidate> cand;
  std::vector<std::uint64_t> chosen(words);
  std::vector<std::uint32_t> granted;

  for (std::uint64_t slot = 0; slot < cfg.total_slots; ++slot) {
    for (std::uint32_t p = 0; p < flat.size(); ++p)
      for (std::uint32_t shot = 0; shot < cfg.injection_per_slot; ++shot) {
        if (queues[p][0] < cfg.queue_cap) {
          ++queues[p][0];
          ++stats.injected;
        } else {
          ++stats.drops;
        }
      }

    cand.clear();
    for (const Demand& d : demands)
      if (queues[d.path][d.hop] > 0)
        cand.push_back({queues[d.path][d.hop], d.hops_left, d.link, d.path, d.hop});
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
      if (a.queue_len != b.queue_len) return a.queue_len > b.queue_len;
      if (a.hops_left != b.hops_left) return a.hops_left < b.hops_left;
      if (a.link != b.link) return a.link < b.link;
      return a.path < b.path;
    });

    std::fill(chosen.begin(), chosen.end(), 0);
    granted.clear();
    for (const Candidate& c : cand) {
      if (chosen[c.link / 64] & (1ULL << (c.link % 64))) continue;  // link already granted
      bool clash = false;
      const std::uint64_t* row = &conflict_bits[c.link * words];
      for (std::size_t w = 0; w < words && !clash; ++w) clash = (row[w] & chosen[w]) != 0;
      if (clash) continue;
      chosen[c.link / 64] |= 1ULL << (c.link % 64);
      granted.push_back(c.link);

      auto& q = queues[c.path];
      --q[c.hop];
      if (c.hop + 1 == q.size()) {
        ++stats.delivered;
        if (slot >= cfg.warmup_slots) ++stats.per_path[c.path];
      } else {
        ++q[c.hop + 1];  // interior queues are uncapped
      }
    }

    if (observer) {
      std::sort(granted.begin(), granted.end());
      observer(slot, granted);
    }
  }

  for (std::size_t p = 0; p < stats.keys.size(); ++p) {
    const auto& key = stats.keys[p];
    stats.per_od[{key.origin, key.destination}] += stats.per_path[p];
  }
  return stats;
}

}  // namespace mra
