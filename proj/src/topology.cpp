#include "mra/topology.hpp"

#include <cmath>
#include <json.hpp>

#include "mra/rng.hpp"

namespace mra {

namespace {

constexpr double kMinSpacing = 25.0;

Graph adjacency_from_positions(const std::vector<Point>& positions, double radius) {
  Graph g(positions.size());
  const double r2 = radius * radius;
  for (NodeId u = 0; u < positions.size(); ++u)
    for (NodeId v = u + 1; v < positions.size(); ++v)
      if (squared_distance(positions[u], positions[v]) <= r2) g.add_edge(u, v);
  return g;
}

void validate_config(const GenerationConfig& cfg) {
  if (cfg.n < 2) throw InvalidArgument("generate_network: n must be >= 2");
  if (cfg.delta < 1) throw InvalidArgument("generate_network: delta must be >= 1");
  if (cfg.side <= 0.0) throw InvalidArgument("generate_network: side must be positive");
  if (cfg.max_attempts < 1) throw InvalidArgument("generate_network: max_attempts must be >= 1");
  if (cfg.max_restarts < 1) throw InvalidArgument("generate_network: max_restarts must be >= 1");
}

}  // namespace

double comm_radius(std::size_t n, std::size_t delta) {
  if (n == 0 || delta == 0) throw InvalidArgument("comm_radius: n and delta must be positive");
  return 200.0 * std::sqrt(20.0 * static_cast<double>(delta) / static_cast<double>(n));
}

Network generate_network(const GenerationConfig& cfg) {
  validate_config(cfg);
  const double radius = comm_radius(cfg.n, cfg.delta);
  const double r2 = radius * radius;
  const double min2 = kMinSpacing * kMinSpacing;

  for (std::size_t restart = 0; restart < cfg.max_restarts; ++restart) {
    Rng rng = Rng(cfg.seed).substream("placement", restart);
    std::vector<Point> positions;
    std::vector<std::size_t> degree;
    positions.push_back({cfg.side / 2.0, cfg.side / 2.0});
    degree.push_back(0);

    std::size_t rejections = 0;
    while (positions.size() < cfg.n && rejections < cfg.max_attempts) {
      const Point cand{rng.next_unit() * cfg.side, rng.next_unit() * cfg.side};

      bool ok = true;
      std::vector<NodeId> cand_neighbors;
      for (NodeId v = 0; v < positions.size() && ok; ++v) {
        const double d2 = squared_distance(cand, positions[v]);
        if (d2 < min2) ok = false;
        else if (d2 <= r2) cand_neighbors.push_back(v);
      }
      if (ok && cand_neighbors.empty()) ok = false;           // would be isolated
      if (ok && cand_neighbors.size() > cfg.delta) ok = false;  // own degree cap
      if (ok)
        for (const NodeId v : cand_neighbors)
          if (degree[v] + 1 > cfg.delta) {  // neighbor's degree cap
            ok = false;
            break;
          }

      if (!ok) {
        ++rejections;
        continue;
      }
      rejections = 0;
      for (const NodeId v : cand_neighbors) ++degree[v];
      degree.push_back(cand_neighbors.size());
      positions.push_back(cand);
    }

    if (positions.size() == cfg.n) {
      Network net;
      net.n = cfg.n;
      net.delta = cfg.delta;
      net.side = cfg.side;
      net.radius = radius;
      net.seed = cfg.seed;
      net.positions = std::move(positions);
      net.graph = adjacency_from_positions(net.positions, radius);
      return net;
    }
  }
  throw GenerationFailure("generate_network: restart budget exhausted for n=" +
                          std::to_string(cfg.n) + " delta=" + std::to_string(cfg.delta));
}

bool are_neighbors(const Network& net, NodeId u, NodeId v) {
  if (u >= net.n || v >= net.n) throw InvalidArgument("are_neighbors: node id out of range");
  if (u == v) return false;
  return squared_distance(net.positions[u], net.positions[v]) <= net.radius * net.radius;
}

std::vector<std::string> audit_network(const Network& net) {
  std::vector<std::string> bad;
  const auto note = [&bad](std::string msg) { bad.push_back(std::move(msg)); };

  if (net.positions.size() != net.n) {
    note("node count mismatch");
    return bad;
  }
  if (net.graph.order() != net.n) {
    note("adjacency order mismatch");
    return bad;
  }
  if (net.n > 0) {
    const Point center{net.side / 2.0, net.side / 2.0};
    if (net.positions[0].x != center.x || net.positions[0].y != center.y)
      note("node 0 is not at the square's center");
  }
  const double r2 = net.radius * net.radius;
  for (NodeId u = 0; u < net.n; ++u) {
    const Point& p = net.positions[u];
    if (p.x < 0.0 || p.x > net.side || p.y < 0.0 || p.y > net.side)
      note("node " + std::to_string(u) + " outside the square");
    const std::size_t deg = net.graph.degree(u);
    if (deg < 1) note("node " + std::to_string(u) + " has no neighbor");
    if (deg > net.delta) note("node " + std::to_string(u) + " exceeds the degree cap");
    for (NodeId v = u + 1; v < net.n; ++v) {
      const double d2 = squared_distance(p, net.positions[v]);
      if (d2 < kMinSpacing * kMinSpacing)
        note("nodes " + std::to_string(u) + "," + std::to_string(v) + " closer than 25");
      const bool adj = net.graph.are_adjacent(u, v);
      if (adj != (d2 <= r2))
        note("adjacency/distance mismatch for " + std::to_string(u) + "," + std::to_string(v));
    }
  }
  return bad;
}

std::string network_to_json(const Network& net) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["n"] = net.n;
  doc["delta"] = net.delta;
  doc["side"] = net.side;
  doc["radius"] = net.radius;
  doc["seed"] = net.seed;
  auto& pos = doc["positions"] = nlohmann::json::array();
  for (const Point& p : net.positions) pos.push_back({p.x, p.y});
  return doc.dump(2);
}

Network network_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("network: bad JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw ParseError("network: unsupported version");
    Network net;
    net.n = doc.at("n").get<std::size_t>();
    net.delta = doc.at("delta").get<std::size_t>();
    net.side = doc.at("side").get<double>();
    net.radius = doc.at("radius").get<double>();
    net.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& item : doc.at("positions"))
      net.positions.push_back({item.at(0).get<double>(), item.at(1).get<double>()});
    net.graph = adjacency_from_positions(net.positions, net.radius);
    const auto bad = audit_network(net);
    if (!bad.empty()) throw ParseError("network: invariant violation: " + bad.front());
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("network: malformed document: ") + e.what());
  }
}

}  // namespace mra
