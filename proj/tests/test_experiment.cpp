#include <doctest.h>

#include <json.hpp>
#include <set>

#include "helpers.hpp"
#include "mra/experiment.hpp"

using namespace mra;

namespace {

Network small_net(std::uint64_t seed, std::size_t n = 20, std::size_t delta = 8) {
  GenerationConfig cfg;
  cfg.n = n;
  cfg.delta = delta;
  cfg.seed = seed;
  return generate_network(cfg);
}

SweepConfig tiny_sweep() {
  SweepConfig cfg;
  cfg.n = 20;
  cfg.delta = 8;
  cfg.networks = 1;
  cfg.od_sets_per_network = 1;
  cfg.theta_points = {1.0};
  cfg.methods = {{RoutingMethod::KDisjoint, 3}};
  cfg.refinement = Refinement::Both;
  cfg.sim.total_slots = 400;
  cfg.sim.warmup_slots = 100;
  cfg.seed = 42;
  return cfg;
}

}  // namespace

TEST_CASE("gen_od_sets produces permutation origins and valid destinations") {
  const Network net = small_net(5);
  const auto sets = gen_od_sets(net, 10, 7);
  REQUIRE(sets.size() == 10);
  for (const ODSet& od : sets) {
    REQUIRE(od.size() == net.n);
    std::set<NodeId> origins;
    for (const auto& [i, j] : od.pairs) {
      CHECK(i != j);
      CHECK(i < net.n);
      CHECK(j < net.n);
      CHECK(origins.insert(i).second);  // each node at most once as origin
    }
    CHECK(origins.size() == net.n);  // and in fact exactly once
  }

  const auto again = gen_od_sets(net, 10, 7);
  for (std::size_t b = 0; b < sets.size(); ++b) CHECK(sets[b].pairs == again[b].pairs);
  const auto other = gen_od_sets(net, 1, 8);
  CHECK(other[0].pairs != sets[0].pairs);

  const Network lone = testutil::network_from_points({{0.0, 0.0}}, 10.0);
  CHECK_THROWS_AS(gen_od_sets(lone, 1, 0), InvalidArgument);
}

TEST_CASE("theta subsets are sized, seeded, and nested") {
  const Network net = small_net(6);
  const ODSet od = gen_od_sets(net, 1, 3)[0];

  CHECK(theta_subset(od, 1.0, 11).pairs == od.pairs);

  const ODSet one = theta_subset(od, 1.0 / static_cast<double>(net.n), 11);
  CHECK(one.size() == 1);

  const ODSet quarter = theta_subset(od, 0.25, 11);
  const ODSet half = theta_subset(od, 0.5, 11);
  CHECK(quarter.size() == 5);
  CHECK(half.size() == 10);
  const std::set<std::pair<NodeId, NodeId>> big(half.pairs.begin(), half.pairs.end());
  for (const auto& pair : quarter.pairs) CHECK(big.count(pair) == 1);

  CHECK_THROWS_AS(theta_subset(od, 0.0, 11), InvalidArgument);
  CHECK_THROWS_AS(theta_subset(od, 1.5, 11), InvalidArgument);
}

TEST_CASE("ceil sizing is robust against binary theta representations") {
  const Network net = small_net(8, 30, 8);
  const ODSet od = gen_od_sets(net, 1, 1)[0];
  CHECK(theta_subset(od, 0.1, 2).size() == 3);  // 0.1*30 must not round up to 4
  CHECK(theta_subset(od, 0.2, 2).size() == 6);
}

TEST_CASE("a minimal sweep emits one original and one refined row") {
  const SweepConfig cfg = tiny_sweep();
  const SweepResult result = run_sweep(cfg);
  CHECK(result.failures.empty());
  REQUIRE(result.rows.size() == 2);
  const RunRecord& original = result.rows[0];
  const RunRecord& refined = result.rows[1];
  CHECK_FALSE(original.refined);
  CHECK(refined.refined);
  CHECK_FALSE(original.sigma.has_value());
  if (original.throughput_pps > 0.0) {
    REQUIRE(refined.sigma.has_value());
    CHECK(*refined.sigma ==
          doctest::Approx(refined.throughput_pps / original.throughput_pps).epsilon(1e-12));
  }
  CHECK(original.seed_path == "s42.net0.od0.t0.k_disjoint.original");
  CHECK(refined.seed_path == "s42.net0.od0.t0.k_disjoint.refined");
}

TEST_CASE("refinement=off drops sigma and refined rows") {
  SweepConfig cfg = tiny_sweep();
  cfg.refinement = Refinement::Off;
  const SweepResult result = run_sweep(cfg);
  REQUIRE(result.rows.size() == 1);
  CHECK_FALSE(result.rows[0].refined);
  CHECK_FALSE(result.rows[0].sigma.has_value());
}

TEST_CASE("row count is networks x od_sets x thetas x methods x 2") {
  SweepConfig cfg = tiny_sweep();
  cfg.networks = 2;
  cfg.od_sets_per_network = 2;
  cfg.theta_points = {0.5, 1.0};
  cfg.methods = {{RoutingMethod::Spa, 1}, {RoutingMethod::KDisjoint, 3}};
  const SweepResult result = run_sweep(cfg);
  CHECK(result.failures.empty());
  CHECK(result.rows.size() == 2 * 2 * 2 * 2 * 2);

  SUBCASE("rows are ordered and reproducible from their seed paths") {
    for (std::size_t t = 0; t + 1 < result.rows.size(); t += 2) {
      CHECK_FALSE(result.rows[t].refined);
      CHECK(result.rows[t + 1].refined);
    }
    // Bit-identical replay for a sample of rows.
    for (const std::size_t idx : {std::size_t{0}, std::size_t{7}, result.rows.size() - 1}) {
      const RunRecord replayed = replay_record(cfg, result.rows[idx].seed_path);
      CHECK(replayed == result.rows[idx]);
    }
  }
}

TEST_CASE("worker pools and serial execution agree") {
  SweepConfig cfg = tiny_sweep();
  cfg.od_sets_per_network = 3;
  cfg.theta_points = {0.5, 1.0};
  const SweepResult serial = run_sweep(cfg);
  cfg.jobs = 4;
  const SweepResult pooled = run_sweep(cfg);
  REQUIRE(serial.rows.size() == pooled.rows.size());
  for (std::size_t t = 0; t < serial.rows.size(); ++t) CHECK(serial.rows[t] == pooled.rows[t]);
}

TEST_CASE("replay rejects malformed or mismatched seed paths") {
  const SweepConfig cfg = tiny_sweep();
  CHECK_THROWS_AS(replay_record(cfg, "nonsense"), InvalidArgument);
  CHECK_THROWS_AS(replay_record(cfg, "s7.net0.od0.t0.k_disjoint.original"), InvalidArgument);
  CHECK_THROWS_AS(replay_record(cfg, "s42.net9.od0.t0.k_disjoint.original"), InvalidArgument);
  CHECK_THROWS_AS(replay_record(cfg, "s42.net0.od0.t0.spa.original"), InvalidArgument);
}

TEST_CASE("CSV carries the documented columns") {
  const SweepConfig cfg = tiny_sweep();
  const SweepResult result = run_sweep(cfg);
  const std::string csv = runs_to_csv(result.rows);
  CHECK(csv.rfind("n,delta,theta,method,refined,throughput_pps,sigma,fairness_paths,"
                  "fairness_od,seed_path\n",
                  0) == 0);
  // One line per row plus the header.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(result.rows.size()) + 1);
  CHECK(csv.find("k_disjoint") != std::string::npos);
}

TEST_CASE("the manifest labels the scheduler and carries substitution notices") {
  const SweepConfig cfg = tiny_sweep();
  const SweepResult result = run_sweep(cfg);
  const std::vector<std::string> notes = {"example note"};
  const auto doc = nlohmann::json::parse(sweep_manifest_json(cfg, result, notes));
  CHECK(doc.at("schema_version").get<int>() == 1);
  CHECK(doc.at("scheduler").get<std::string>() == "greedy-tdma");
  CHECK(doc.at("master_seed").get<std::uint64_t>() == 42);
  CHECK(doc.at("substitutions").size() == 3);
  CHECK(doc.at("row_count").get<std::size_t>() == result.rows.size());
  CHECK(doc.at("notes")[0].get<std::string>() == "example note");
  CHECK(doc.at("config").at("sim").at("slot_seconds").get<double>() == 0.002);
}
