// metrics.hpp — throughput, the refined/original ratio, and Jain fairness.
//
// Index arithmetic is exact: fairness over m counts is (sum x)^2 / (m sum x^2)
// as a rational, converted to decimal only when reports are written.
#pragma once

#include <cstdint>
#include <span>

#include "mra/rational.hpp"
#include "mra/scheduler.hpp"

namespace mra {

// Delivered packets per slot: (sum of x_p) / measured_slots.
Rational throughput(const TrafficStats& stats);

// Ratio of the refined path set's throughput to the original's. Throws
// UndefinedRatio when the original saw no traffic.
Rational sigma(const Rational& refined, const Rational& original);

// Jain index over per-path delivered counts; ranges 1/|x|..1, equal to 1 when
// traffic is evenly spread. Throws InvalidArgument on an empty or all-zero
// vector. Paths that delivered nothing stay in, depressing the index.
Rational fairness_paths(std::span<const std::uint64_t> x);

// Same index over per-origin-destination totals x_ij.
Rational fairness_od(std::span<const std::uint64_t> x);

// Shared core over exact rational entries (used by the scale-invariance
// checks, where alpha*x need not be integral).
Rational fairness_index(std::span<const Rational> x);

struct ThroughputReport {
  double packets_per_slot = 0.0;
  double packets_per_second = 0.0;  // packets_per_slot / slot_seconds
  double theta = 0.0;               // |OD| / n
};

ThroughputReport make_report(const TrafficStats& stats, double slot_seconds, double theta);

}  // namespace mra
