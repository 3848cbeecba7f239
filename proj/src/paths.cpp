#include "mra/paths.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

namespace mra {

std::string to_string(RoutingMethod m) {
  switch (m) {
    case RoutingMethod::Spa: return "spa";
    case RoutingMethod::KDisjoint: return "k_disjoint";
    case RoutingMethod::MprSpa: return "mpr_spa";
    case RoutingMethod::MprKDisjoint: return "mpr_k_disjoint";
  }
  throw InvalidArgument("unknown routing method");
}

RoutingMethod routing_method_from_string(const std::string& name) {
  if (name == "spa") return RoutingMethod::Spa;
  if (name == "k_disjoint") return RoutingMethod::KDisjoint;
  if (name == "mpr_spa") return RoutingMethod::MprSpa;
  if (name == "mpr_k_disjoint") return RoutingMethod::MprKDisjoint;
  throw InvalidArgument("unknown routing method: " + name);
}

NextMap next_sets(const PathSet& ps) {
  NextMap nexts;
  for (const Path& p : ps.paths)
    for (std::size_t h = 0; h + 1 < p.nodes.size(); ++h) {
      auto& outs = nexts[p.nodes[h]];
      const NodeId m = p.nodes[h + 1];
      const auto it = std::lower_bound(outs.begin(), outs.end(), m);
      if (it == outs.end() || *it != m) outs.insert(it, m);
    }
  return nexts;
}

std::vector<std::string> audit_path_set(const Network& net, const PathSet& ps) {
  std::vector<std::string> bad;
  std::set<std::vector<NodeId>> seen;
  for (PathId id = 0; id < ps.paths.size(); ++id) {
    const auto& nodes = ps.paths[id].nodes;
    const std::string tag = "path " + std::to_string(id);
    if (nodes.size() < 2) {
      bad.push_back(tag + ": fewer than two nodes");
      continue;
    }
    if (nodes.front() != ps.origin) bad.push_back(tag + ": does not start at the origin");
    if (nodes.back() != ps.destination) bad.push_back(tag + ": does not end at the destination");
    for (const NodeId u : nodes)
      if (u >= net.n) bad.push_back(tag + ": node id out of range");
    std::set<NodeId> uniq(nodes.begin(), nodes.end());
    if (uniq.size() != nodes.size()) bad.push_back(tag + ": repeated node");
    for (std::size_t h = 0; h + 1 < nodes.size(); ++h)
      if (nodes[h] < net.n && nodes[h + 1] < net.n && !are_neighbors(net, nodes[h], nodes[h + 1]))
        bad.push_back(tag + ": hop " + std::to_string(h) + " joins non-neighbors");
    if (!seen.insert(nodes).second) bad.push_back(tag + ": duplicate node sequence");
  }
  return bad;
}

std::string path_set_to_json(const PathSet& ps) {
  nlohmann::json doc;
  doc["origin"] = ps.origin;
  doc["destination"] = ps.destination;
  doc["method"] = to_string(ps.method);
  doc["k_max"] = ps.k_max;
  auto& paths = doc["paths"] = nlohmann::json::array();
  for (const Path& p : ps.paths) paths.push_back(p.nodes);
  return doc.dump(2);
}

PathSet path_set_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("path set: bad JSON: ") + e.what());
  }
  try {
    PathSet ps;
    ps.origin = doc.at("origin").get<NodeId>();
    ps.destination = doc.at("destination").get<NodeId>();
    ps.method = routing_method_from_string(doc.at("method").get<std::string>());
    ps.k_max = doc.at("k_max").get<std::size_t>();
    for (const auto& item : doc.at("paths")) {
      Path p;
      for (const auto& node : item) p.nodes.push_back(node.get<NodeId>());
      ps.paths.push_back(std::move(p));
    }
    return ps;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("path set: malformed document: ") + e.what());
  }
}

}  // namespace mra
