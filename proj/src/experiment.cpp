#include "mra/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "mra/rng.hpp"

namespace mra {

namespace {

ODSet gen_one_od_set(std::size_t n, Rng rng) {
  std::vector<NodeId> origins(n);
  for (NodeId u = 0; u < n; ++u) origins[u] = u;
  for (std::size_t t = n - 1; t > 0; --t)
    std::swap(origins[t], origins[rng.next_below(t + 1)]);
  ODSet od;
  od.pairs.reserve(n);
  for (const NodeId origin : origins) {
    NodeId dest = static_cast<NodeId>(rng.next_below(n - 1));
    if (dest >= origin) ++dest;
    od.pairs.emplace_back(origin, dest);
  }
  return od;
}

std::string seed_path_string(std::uint64_t seed, std::size_t net, std::size_t od,
                             std::size_t theta_idx, RoutingMethod method, bool refined) {
  return "s" + std::to_string(seed) + ".net" + std::to_string(net) + ".od" + std::to_string(od) +
         ".t" + std::to_string(theta_idx) + "." + to_string(method) +
         (refined ? ".refined" : ".original");
}

struct ParsedSeedPath {
  std::uint64_t seed = 0;
  std::size_t net = 0, od = 0, theta_idx = 0;
  RoutingMethod method = RoutingMethod::Spa;
  bool refined = false;
};

ParsedSeedPath parse_seed_path(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t dot = text.find('.', start);
    parts.push_back(text.substr(start, dot == std::string::npos ? dot : dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  const auto field = [&](std::size_t idx, const std::string& prefix) -> std::uint64_t {
    if (idx >= parts.size() || parts[idx].rfind(prefix, 0) != 0)
      throw InvalidArgument("seed path: expected " + prefix + "<int> in '" + text + "'");
    return std::stoull(parts[idx].substr(prefix.size()));
  };
  ParsedSeedPath p;
  if (parts.size() != 6) throw InvalidArgument("seed path: malformed '" + text + "'");
  p.seed = field(0, "s");
  p.net = field(1, "net");
  p.od = field(2, "od");
  p.theta_idx = field(3, "t");
  p.method = routing_method_from_string(parts[4]);
  if (parts[5] == "refined") p.refined = true;
  else if (parts[5] == "original") p.refined = false;
  else throw InvalidArgument("seed path: bad suffix '" + parts[5] + "'");
  return p;
}

struct PointRows {
  std::optional<RunRecord> original;
  std::optional<RunRecord> refined;
};

std::optional<double> od_fairness(const TrafficStats& stats) {
  std::vector<std::uint64_t> counts;
  counts.reserve(stats.per_od.size());
  for (const auto& [pair, x] : stats.per_od) counts.push_back(x);
  if (counts.empty()) return std::nullopt;
  try {
    return fairness_od(counts).to_double();
  } catch (const InvalidArgument&) {
    return std::nullopt;  // nothing delivered anywhere
  }
}

std::optional<double> path_fairness(const TrafficStats& stats) {
  if (stats.per_path.empty()) return std::nullopt;
  try {
    return fairness_paths(stats.per_path).to_double();
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

// One (network, od set, theta, method) point; produces the original and/or
// refined rows, sharing the scheduler seed so sigma compares like with like.
PointRows compute_point(const SweepConfig& cfg, const Network& net, std::size_t net_idx,
                        std::size_t od_idx, std::size_t theta_idx, std::size_t method_idx) {
  const double theta = cfg.theta_points[theta_idx];
  const RoutingConfig mc = cfg.methods[method_idx];

  // Same derivation as gen_od_sets seeded with the per-network "od" stream.
  const ODSet full =
      gen_one_od_set(net.n, Rng(derive_seed(cfg.seed, "od", net_idx)).substream("odset", od_idx));
  const ODSet sub = theta_subset(full, theta, derive_seed(cfg.seed, "grp", net_idx, od_idx));

  const RouteSource source = [&net, &mc](NodeId origin, NodeId destination) {
    return route(net, mc, origin, destination);
  };

  std::vector<PathSet> original_sets;
  for (const auto& [i, j] : sub.pairs) {
    PathSet ps = route(net, mc, i, j);
    if (!ps.empty()) original_sets.push_back(std::move(ps));
  }
  const std::uint64_t sim_seed =
      derive_seed(derive_seed(cfg.seed, "sim", net_idx, od_idx), "point", theta_idx, method_idx);

  PointRows rows;
  const auto base_record = [&](bool refined) {
    RunRecord r;
    r.n = cfg.n;
    r.delta = cfg.delta;
    r.theta = theta;
    r.method = mc.method;
    r.refined = refined;
    r.seed_path = seed_path_string(cfg.seed, net_idx, od_idx, theta_idx, mc.method, refined);
    return r;
  };

  std::optional<Rational> original_tp;
  if (cfg.refinement != Refinement::On) {
    const TrafficStats stats = simulate_tdma(net, original_sets, cfg.sim, sim_seed);
    RunRecord r = base_record(false);
    original_tp = throughput(stats);
    r.throughput_pps = original_tp->to_double();
    r.fairness_paths = path_fairness(stats);
    r.fairness_od = od_fairness(stats);
    rows.original = std::move(r);
  }
  if (cfg.refinement != Refinement::Off) {
    std::vector<PathSet> refined_sets;
    for (const PathSet& ps : original_sets) refined_sets.push_back(refine(net, ps, source));
    const TrafficStats stats = simulate_tdma(net, refined_sets, cfg.sim, sim_seed);
    RunRecord r = base_record(true);
    const Rational tp = throughput(stats);
    r.throughput_pps = tp.to_double();
    if (original_tp && !(*original_tp == Rational(0)))
      r.sigma = sigma(tp, *original_tp).to_double();
    r.fairness_paths = path_fairness(stats);
    r.fairness_od = od_fairness(stats);
    rows.refined = std::move(r);
  }
  return rows;
}

void validate_sweep_config(const SweepConfig& cfg) {
  if (cfg.networks < 1) throw InvalidArgument("sweep: networks must be >= 1");
  if (cfg.od_sets_per_network < 1) throw InvalidArgument("sweep: od_sets_per_network must be >= 1");
  if (cfg.theta_points.empty()) throw InvalidArgument("sweep: no theta points");
  for (const double theta : cfg.theta_points)
    if (!(theta > 0.0) || theta > 1.0) throw InvalidArgument("sweep: theta must be in (0, 1]");
  if (cfg.methods.empty()) throw InvalidArgument("sweep: no routing methods");
  for (const RoutingConfig& mc : cfg.methods)
    if (mc.k_max < 1) throw InvalidArgument("sweep: k_max must be >= 1");
  if (cfg.sim.warmup_slots >= cfg.sim.total_slots)
    throw InvalidArgument("sweep: warmup_slots must be below total_slots");
}

Network generate_sweep_network(const SweepConfig& cfg, std::size_t net_idx) {
  GenerationConfig gen;
  gen.n = cfg.n;
  gen.delta = cfg.delta;
  gen.side = cfg.side;
  gen.seed = derive_seed(cfg.seed, "net", net_idx);
  return generate_network(gen);
}

}  // namespace

std::vector<ODSet> gen_od_sets(const Network& net, std::size_t count, std::uint64_t seed) {
  if (net.n < 2) throw InvalidArgument("gen_od_sets: need at least two nodes");
  std::vector<ODSet> sets;
  sets.reserve(count);
  for (std::size_t b = 0; b < count; ++b)
    sets.push_back(gen_one_od_set(net.n, Rng(seed).substream("odset", b)));
  return sets;
}

ODSet theta_subset(const ODSet& od, double theta, std::uint64_t seed) {
  if (!(theta > 0.0) || theta > 1.0) throw InvalidArgument("theta_subset: theta must be in (0, 1]");
  const std::size_t n = od.pairs.size();
  if (n == 0) return od;
  std::size_t m = static_cast<std::size_t>(std::ceil(theta * static_cast<double>(n) - 1e-9));
  m = std::clamp<std::size_t>(m, 1, n);

  std::vector<std::size_t> perm(n);
  for (std::size_t t = 0; t < n; ++t) perm[t] = t;
  Rng rng(seed);
  for (std::size_t t = n - 1; t > 0; --t) std::swap(perm[t], perm[rng.next_below(t + 1)]);

  // Membership comes from the permutation prefix (hence nested across theta);
  // pairs keep their original order.
  std::vector<std::size_t> picked(perm.begin(), perm.begin() + m);
  std::sort(picked.begin(), picked.end());
  ODSet sub;
  sub.pairs.reserve(m);
  for (const std::size_t idx : picked) sub.pairs.push_back(od.pairs[idx]);
  return sub;
}

std::string to_string(Refinement r) {
  switch (r) {
    case Refinement::Off: return "off";
    case Refinement::On: return "on";
    case Refinement::Both: return "both";
  }
  throw InvalidArgument("unknown refinement mode");
}

Refinement refinement_from_string(const std::string& name) {
  if (name == "off") return Refinement::Off;
  if (name == "on") return Refinement::On;
  if (name == "both") return Refinement::Both;
  throw InvalidArgument("unknown refinement mode: " + name);
}

SweepResult run_sweep(const SweepConfig& cfg) {
  validate_sweep_config(cfg);
  SweepResult result;

  std::vector<Network> nets;
  nets.reserve(cfg.networks);
  std::vector<bool> net_ok(cfg.networks, false);
  for (std::size_t a = 0; a < cfg.networks; ++a) {
    try {
      nets.push_back(generate_sweep_network(cfg, a));
      net_ok[a] = true;
    } catch (const Error& e) {
      nets.emplace_back();
      result.failures.push_back({"s" + std::to_string(cfg.seed) + ".net" + std::to_string(a),
                                 e.what()});
    }
  }

  struct Point {
    std::size_t net, od, theta, method;
  };
  std::vector<Point> points;
  for (std::size_t a = 0; a < cfg.networks; ++a)
    for (std::size_t b = 0; b < cfg.od_sets_per_network; ++b)
      for (std::size_t t = 0; t < cfg.theta_points.size(); ++t)
        for (std::size_t m = 0; m < cfg.methods.size(); ++m) points.push_back({a, b, t, m});

  std::vector<PointRows> slots(points.size());
  std::vector<std::optional<SweepFailure>> point_failures(points.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= points.size()) return;
      const Point& pt = points[idx];
      if (!net_ok[pt.net]) continue;  // already reported
      try {
        slots[idx] = compute_point(cfg, nets[pt.net], pt.net, pt.od, pt.theta, pt.method);
      } catch (const std::exception& e) {
        point_failures[idx] = SweepFailure{
            seed_path_string(cfg.seed, pt.net, pt.od, pt.theta, cfg.methods[pt.method].method,
                             false),
            e.what()};
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    if (point_failures[idx]) result.failures.push_back(*point_failures[idx]);
    if (slots[idx].original) result.rows.push_back(std::move(*slots[idx].original));
    if (slots[idx].refined) result.rows.push_back(std::move(*slots[idx].refined));
  }
  return result;
}

RunRecord replay_record(const SweepConfig& cfg, const std::string& seed_path) {
  const ParsedSeedPath p = parse_seed_path(seed_path);
  if (p.seed != cfg.seed) throw InvalidArgument("replay: seed path belongs to another master seed");
  if (p.net >= cfg.networks || p.od >= cfg.od_sets_per_network ||
      p.theta_idx >= cfg.theta_points.size())
    throw InvalidArgument("replay: seed path indices outside the sweep config");
  std::size_t method_idx = cfg.methods.size();
  for (std::size_t m = 0; m < cfg.methods.size(); ++m)
    if (method_idx == cfg.methods.size() && cfg.methods[m].method == p.method) method_idx = m;
  if (method_idx == cfg.methods.size())
    throw InvalidArgument("replay: method not part of the sweep config");

  const Network net = generate_sweep_network(cfg, p.net);
  const PointRows rows = compute_point(cfg, net, p.net, p.od, p.theta_idx, method_idx);
  const std::optional<RunRecord>& want = p.refined ? rows.refined : rows.original;
  if (!want) throw InvalidArgument("replay: the requested row is not produced by this config");
  return *want;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

static void append_optional(std::string& out, const std::optional<double>& v) {
  if (v) out += format_double(*v);
}

std::string runs_to_csv(std::span<const RunRecord> rows) {
  std::string out =
      "n,delta,theta,method,refined,throughput_pps,sigma,fairness_paths,fairness_od,seed_path\n";
  for (const RunRecord& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.delta) + "," + format_double(r.theta) +
           "," + to_string(r.method) + "," + (r.refined ? "1" : "0") + "," +
           format_double(r.throughput_pps) + ",";
    append_optional(out, r.sigma);
    out += ",";
    append_optional(out, r.fairness_paths);
    out += ",";
    append_optional(out, r.fairness_od);
    out += "," + r.seed_path + "\n";
  }
  return out;
}

std::string sweep_manifest_json(const SweepConfig& cfg, const SweepResult& result,
                                std::span<const std::string> notes) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["tool"] = "mra";
  doc["scheduler"] = "greedy-tdma";
  doc["master_seed"] = cfg.seed;
  auto& c = doc["config"];
  c["n"] = cfg.n;
  c["delta"] = cfg.delta;
  c["side"] = cfg.side;
  c["networks"] = cfg.networks;
  c["od_sets_per_network"] = cfg.od_sets_per_network;
  c["theta_points"] = cfg.theta_points;
  c["refinement"] = to_string(cfg.refinement);
  auto& methods = c["methods"] = nlohmann::json::array();
  for (const RoutingConfig& mc : cfg.methods)
    methods.push_back({{"method", to_string(mc.method)}, {"k_max", mc.k_max}});
  auto& sim = c["sim"];
  sim["total_slots"] = cfg.sim.total_slots;
  sim["warmup_slots"] = cfg.sim.warmup_slots;
  sim["injection_per_slot"] = cfg.sim.injection_per_slot;
  sim["queue_cap"] = cfg.sim.queue_cap;
  sim["slot_seconds"] = cfg.sim.slot_seconds;
  doc["substitutions"] = {
      "routing: protocol agents replaced by deterministic graph proxies; "
      "K acts as an upper bound for both multi-path proxies",
      "scheduler: greedy maximal-independent-set longest-queue-first TDMA "
      "substitutes for a path-oriented link scheduler",
      "queueing: packet drops occur only at injection, interior queues are uncapped",
  };
  auto& failures = doc["failures"] = nlohmann::json::array();
  for (const SweepFailure& f : result.failures)
    failures.push_back({{"seed_path", f.seed_path}, {"message", f.message}});
  doc["row_count"] = result.rows.size();
  auto& note_list = doc["notes"] = nlohmann::json::array();
  for (const std::string& n : notes) note_list.push_back(n);
  return doc.dump(2);
}

}  // namespace mra
