// experiment.hpp — OD-set generation, theta sweeps, and run records.
//
// Every row a sweep emits carries a seed path (master seed plus stream
// indices) from which it can be regenerated bit-identically.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mra/metrics.hpp"
#include "mra/refine.hpp"
#include "mra/routing.hpp"
#include "mra/scheduler.hpp"
#include "mra/topology.hpp"

namespace mra {

struct ODSet {
  std::vector<std::pair<NodeId, NodeId>> pairs;  // origin != destination, origins unique

  std::size_t size() const { return pairs.size(); }
};

// count sets of n pairs each: origins are a permutation of all nodes,
// destinations uniform among the other nodes.
std::vector<ODSet> gen_od_sets(const Network& net, std::size_t count, std::uint64_t seed);

// ceil(theta*n) pairs of od, drawn through a seeded permutation so that larger
// theta subsets contain smaller ones for the same seed.
ODSet theta_subset(const ODSet& od, double theta, std::uint64_t seed);

enum class Refinement { Off, On, Both };

std::string to_string(Refinement r);
Refinement refinement_from_string(const std::string& name);

struct SweepConfig {
  std::size_t n = 60;
  std::size_t delta = 8;
  double side = 1500.0;
  std::size_t networks = 1;
  std::size_t od_sets_per_network = 100;
  std::vector<double> theta_points = {1.0};
  std::vector<RoutingConfig> methods = {{RoutingMethod::KDisjoint, 5}};
  Refinement refinement = Refinement::Both;
  SimConfig sim;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;  // sweep points are independent; results keep point order
};

struct RunRecord {
  std::size_t n = 0;
  std::size_t delta = 0;
  double theta = 0.0;
  RoutingMethod method = RoutingMethod::Spa;
  bool refined = false;
  double throughput_pps = 0.0;  // delivered packets per slot
  std::optional<double> sigma;
  std::optional<double> fairness_paths;
  std::optional<double> fairness_od;
  std::string seed_path;

  friend bool operator==(const RunRecord& a, const RunRecord& b) = default;
};

struct SweepFailure {
  std::string seed_path;
  std::string message;
};

struct SweepResult {
  std::vector<RunRecord> rows;  // ordered by (network, od set, theta, method)
  std::vector<SweepFailure> failures;
};

SweepResult run_sweep(const SweepConfig& cfg);

// Recomputes one row from its seed path; the result is bit-identical to the
// row the sweep produced. Throws InvalidArgument on a malformed or mismatched
// path.
RunRecord replay_record(const SweepConfig& cfg, const std::string& seed_path);

// Shortest round-trip decimal formatting, shared by every report writer.
std::string format_double(double value);

std::string runs_to_csv(std::span<const RunRecord> rows);
std::string sweep_manifest_json(const SweepConfig& cfg, const SweepResult& result,
                                std::span<const std::string> notes = {});

}  // namespace mra
