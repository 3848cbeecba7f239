// mra — command-line frontend: topology generation, route discovery,
// refinement, TDMA evaluation, and full experiment sweeps.
//
// Exit codes: 0 success, 1 configuration error, 2 partial failures or
// audit violations.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mra/experiment.hpp"
#include "mra/metrics.hpp"
#include "mra/refine.hpp"
#include "mra/routing.hpp"
#include "mra/scheduler.hpp"
#include "mra/topology.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mra::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw mra::Error("cannot write " + path);
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) std::cout << text << "\n";
  else write_file(out_path, text);
}

mra::RoutingConfig resolve_method(const std::string& name, std::size_t k, std::size_t delta) {
  mra::RoutingConfig rc;
  rc.method = mra::routing_method_from_string(name);
  rc.k_max = k > 0 ? k : mra::default_k(rc.method, delta);
  return rc;
}

// The five-path worked example used by the golden pipeline: paths a..e with
// hop counts 2,3,4,3,3 and the pair classification over k1..k6 (=1..6), j=7.
mra::PathSet golden_paths() {
  mra::PathSet ps;
  ps.origin = 0;
  ps.destination = 7;
  for (const auto& nodes : std::vector<std::vector<mra::NodeId>>{{0, 1, 7},
                                                                 {0, 2, 6, 7},
                                                                 {0, 3, 2, 6, 7},
                                                                 {0, 1, 5, 7},
                                                                 {0, 4, 6, 7}})
    ps.paths.push_back({nodes});
  return ps;
}

mra::PairClassification golden_classification() {
  mra::PairClassification pc;
  pc.type_a = {{1, 5, {3}}, {1, 7, {0}}, {2, 3, {2}}, {2, 6, {1, 2}}, {4, 6, {4}}};
  pc.type_b = {{3, 5}};
  return pc;
}

int cmd_fig1() {
  const mra::PathSet ps = golden_paths();
  const mra::PairClassification pc = golden_classification();
  std::cout << "pair classification\n";
  for (const auto& a : pc.type_a) {
    std::cout << "  type-A (" << a.k << "," << a.k2 << ") paths";
    for (const auto id : a.paths) std::cout << " " << id;
    std::cout << "\n";
  }
  for (const auto& b : pc.type_b) std::cout << "  type-B (" << b.k << "," << b.k2 << ")\n";
  const mra::ConflictGraph cg = mra::build_conflict_graph(pc, ps);
  std::cout << "conflict graph\n" << mra::dump_conflict_graph(cg);
  const auto selected = mra::mwis_solve(mra::to_weighted_graph(cg));
  std::cout << "selected";
  for (const auto id : selected) std::cout << " " << id;
  std::cout << "\nweight " << mra::total_weight(mra::to_weighted_graph(cg), selected).str()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-path route refinement toolkit for wireless mesh networks"};
  app.require_subcommand(1);

  // gen-net
  auto* gen = app.add_subcommand("gen-net", "generate a random unit-disk mesh network");
  std::size_t gn_n = 60, gn_delta = 8, gn_attempts = 1000, gn_restarts = 100;
  double gn_side = 1500.0;
  std::uint64_t gn_seed = 0;
  std::string gn_out;
  gen->add_option("--n", gn_n, "node count")->required();
  gen->add_option("--delta", gn_delta, "maximum degree")->required();
  gen->add_option("--side", gn_side, "square side")->capture_default_str();
  gen->add_option("--max-attempts", gn_attempts, "consecutive rejections per restart")->capture_default_str();
  gen->add_option("--restarts", gn_restarts, "whole-network restarts")->capture_default_str();
  gen->add_option("--seed", gn_seed, "generation seed")->capture_default_str();
  gen->add_option("-o,--out", gn_out, "output network JSON (stdout if omitted)");

  // route
  auto* rt = app.add_subcommand("route", "discover paths for one origin-destination pair");
  std::string rt_net, rt_method = "k_disjoint", rt_out;
  std::size_t rt_k = 0;
  mra::NodeId rt_i = 0, rt_j = 0;
  rt->add_option("--net", rt_net, "network JSON file")->required();
  rt->add_option("--method", rt_method, "spa|k_disjoint|mpr_spa|mpr_k_disjoint")->capture_default_str();
  rt->add_option("--k", rt_k, "K (0 = per-method default)")->capture_default_str();
  rt->add_option("--origin", rt_i, "origin node")->required();
  rt->add_option("--dest", rt_j, "destination node")->required();
  rt->add_option("-o,--out", rt_out, "output path-set JSON (stdout if omitted)");

  // refine
  auto* rf = app.add_subcommand("refine", "prune a path set to non-interfering paths");
  std::string rf_net, rf_paths, rf_out;
  bool rf_dump = false;
  rf->add_option("--net", rf_net, "network JSON file")->required();
  rf->add_option("--paths", rf_paths, "path-set JSON file")->required();
  rf->add_option("-o,--out", rf_out, "output path-set JSON (stdout if omitted)");
  rf->add_flag("--dump-graph", rf_dump, "print the conflict graph before solving");

  // simulate
  auto* sim = app.add_subcommand("simulate", "TDMA-schedule path sets and report metrics");
  std::string sim_net, sim_trace;
  std::vector<std::string> sim_paths;
  mra::SimConfig sim_cfg;
  bool sim_zero_od = false;
  std::uint64_t sim_seed = 0;
  sim->add_option("--net", sim_net, "network JSON file")->required();
  sim->add_option("--paths", sim_paths, "path-set JSON files")->required()->expected(-1);
  sim->add_option("--slots", sim_cfg.total_slots, "total slots")->capture_default_str();
  sim->add_option("--warmup", sim_cfg.warmup_slots, "warm-up slots")->capture_default_str();
  sim->add_option("--queue-cap", sim_cfg.queue_cap, "origin queue bound")->capture_default_str();
  sim->add_option("--injection", sim_cfg.injection_per_slot, "packets per path per slot")->capture_default_str();
  sim->add_option("--slot-seconds", sim_cfg.slot_seconds, "slot duration for reports")->capture_default_str();
  sim->add_option("--seed", sim_seed, "scheduler seed (recorded only)")->capture_default_str();
  sim->add_option("--trace", sim_trace, "write per-slot active link indices to a file");
  sim->add_flag("--zero-od", sim_zero_od, "report OD pairs that delivered nothing");

  // sweep
  auto* sw = app.add_subcommand("sweep", "run an original-vs-refined experiment sweep");
  mra::SweepConfig sweep;
  std::vector<std::string> sw_methods = {"k_disjoint"};
  std::string sw_refinement = "both", sw_csv, sw_manifest;
  std::size_t sw_k = 0;
  sw->add_option("--n", sweep.n, "node count")->capture_default_str();
  sw->add_option("--delta", sweep.delta, "maximum degree")->capture_default_str();
  sw->add_option("--side", sweep.side, "square side")->capture_default_str();
  sw->add_option("--networks", sweep.networks, "number of networks")->capture_default_str();
  sw->add_option("--od-sets", sweep.od_sets_per_network, "OD sets per network")->capture_default_str();
  sw->add_option("--thetas", sweep.theta_points, "pair densities in (0,1]")->capture_default_str()->expected(-1);
  sw->add_option("--methods", sw_methods, "routing methods")->capture_default_str()->expected(-1);
  sw->add_option("--k", sw_k, "K override for multi-path methods (0 = default)")->capture_default_str();
  sw->add_option("--refinement", sw_refinement, "off|on|both")->capture_default_str();
  sw->add_option("--slots", sweep.sim.total_slots, "total slots")->capture_default_str();
  sw->add_option("--warmup", sweep.sim.warmup_slots, "warm-up slots")->capture_default_str();
  sw->add_option("--queue-cap", sweep.sim.queue_cap, "origin queue bound")->capture_default_str();
  sw->add_option("--seed", sweep.seed, "master seed")->capture_default_str();
  sw->add_option("--jobs", sweep.jobs, "worker threads")->capture_default_str();
  sw->add_option("--out-csv", sw_csv, "write RunRecords as CSV");
  sw->add_option("--out-manifest", sw_manifest, "write the JSON run manifest");

  // audit
  auto* au = app.add_subcommand("audit", "validate stored artifacts against the invariants");
  std::string au_net;
  std::vector<std::string> au_paths;
  au->add_option("--net", au_net, "network JSON file")->required();
  au->add_option("--paths", au_paths, "path-set JSON files")->expected(-1);

  // fig1
  auto* fig = app.add_subcommand("fig1", "run the golden worked-example pipeline and print it");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      mra::GenerationConfig cfg;
      cfg.n = gn_n;
      cfg.delta = gn_delta;
      cfg.side = gn_side;
      cfg.max_attempts = gn_attempts;
      cfg.max_restarts = gn_restarts;
      cfg.seed = gn_seed;
      const mra::Network net = mra::generate_network(cfg);
      emit(gn_out, mra::network_to_json(net));
      std::cerr << "generated n=" << net.n << " delta=" << net.delta << " radius=" << net.radius
                << "\n";
      return 0;
    }

    if (rt->parsed()) {
      const mra::Network net = mra::network_from_json(read_file(rt_net));
      const mra::RoutingConfig rc = resolve_method(rt_method, rt_k, net.delta);
      const mra::PathSet ps = mra::route(net, rc, rt_i, rt_j);
      emit(rt_out, mra::path_set_to_json(ps));
      return 0;
    }

    if (rf->parsed()) {
      const mra::Network net = mra::network_from_json(read_file(rf_net));
      const mra::PathSet ps = mra::path_set_from_json(read_file(rf_paths));
      const auto bad = mra::audit_path_set(net, ps);
      if (!bad.empty()) throw mra::InvalidArgument("path set fails audit: " + bad.front());
      const mra::RoutingConfig rc{ps.method, ps.k_max};
      const mra::RouteSource source = [&net, &rc](mra::NodeId a, mra::NodeId b) {
        return mra::route(net, rc, a, b);
      };
      const mra::RefineOutcome outcome = mra::refine_detailed(net, ps, source);
      if (rf_dump && outcome.graph) std::cerr << mra::dump_conflict_graph(*outcome.graph);
      emit(rf_out, mra::path_set_to_json(outcome.refined));
      return 0;
    }

    if (sim->parsed()) {
      const mra::Network net = mra::network_from_json(read_file(sim_net));
      std::vector<mra::PathSet> active;
      for (const std::string& file : sim_paths) {
        mra::PathSet ps = mra::path_set_from_json(read_file(file));
        const auto bad = mra::audit_path_set(net, ps);
        if (!bad.empty()) throw mra::InvalidArgument(file + " fails audit: " + bad.front());
        active.push_back(std::move(ps));
      }
      std::ofstream trace;
      mra::SlotObserver observer;
      if (!sim_trace.empty()) {
        trace.open(sim_trace);
        if (!trace) throw mra::Error("cannot write " + sim_trace);
        observer = [&trace](std::uint64_t slot, std::span<const std::uint32_t> links) {
          trace << slot;
          for (const auto l : links) trace << " " << l;
          trace << "\n";
        };
      }
      const mra::TrafficStats stats = mra::simulate_tdma(net, active, sim_cfg, sim_seed, observer);
      const mra::Rational tp = mra::throughput(stats);
      std::cout << "measured_slots " << stats.measured_slots << "\n";
      std::cout << "throughput_pps " << mra::format_double(tp.to_double()) << "\n";
      std::cout << "throughput_pkts_per_second "
                << mra::format_double(tp.to_double() / sim_cfg.slot_seconds) << "\n";
      try {
        std::cout << "fairness_paths "
                  << mra::format_double(mra::fairness_paths(stats.per_path).to_double()) << "\n";
      } catch (const mra::InvalidArgument&) {
        std::cout << "fairness_paths undefined\n";
      }
      std::vector<std::uint64_t> od_counts;
      for (const auto& [pair, x] : stats.per_od) od_counts.push_back(x);
      try {
        std::cout << "fairness_od " << mra::format_double(mra::fairness_od(od_counts).to_double())
                  << "\n";
      } catch (const mra::InvalidArgument&) {
        std::cout << "fairness_od undefined\n";
      }
      if (sim_zero_od) {
        std::size_t zero = 0;
        for (const auto& [pair, x] : stats.per_od)
          if (x == 0) {
            ++zero;
            std::cout << "zero-od " << pair.first << " " << pair.second << "\n";
          }
        std::cout << "zero-od-count " << zero << " of " << stats.per_od.size() << "\n";
      }
      return 0;
    }

    if (sw->parsed()) {
      sweep.refinement = mra::refinement_from_string(sw_refinement);
      sweep.methods.clear();
      for (const std::string& name : sw_methods)
        sweep.methods.push_back(resolve_method(name, sw_k, sweep.delta));
      const mra::SweepResult result = mra::run_sweep(sweep);
      if (!sw_csv.empty()) write_file(sw_csv, mra::runs_to_csv(result.rows));
      else std::cout << mra::runs_to_csv(result.rows);
      if (!sw_manifest.empty()) write_file(sw_manifest, mra::sweep_manifest_json(sweep, result));
      std::cerr << "rows " << result.rows.size() << ", failures " << result.failures.size()
                << "\n";
      return result.failures.empty() ? 0 : 2;
    }

    if (au->parsed()) {
      const mra::Network net = mra::network_from_json(read_file(au_net));
      std::size_t violations = 0;
      for (const std::string& msg : mra::audit_network(net)) {
        ++violations;
        std::cout << au_net << ": " << msg << "\n";
      }
      for (const std::string& file : au_paths) {
        const mra::PathSet ps = mra::path_set_from_json(read_file(file));
        for (const std::string& msg : mra::audit_path_set(net, ps)) {
          ++violations;
          std::cout << file << ": " << msg << "\n";
        }
      }
      std::cout << "violations " << violations << "\n";
      return violations == 0 ? 0 : 2;
    }

    if (fig->parsed()) return cmd_fig1();
  } catch (const mra::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
