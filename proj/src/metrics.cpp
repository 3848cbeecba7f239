#include "mra/metrics.hpp"

#include <vector>

namespace mra {

Rational throughput(const TrafficStats& stats) {
  if (stats.measured_slots == 0) throw InvalidArgument("throughput: no measured slots");
  std::int64_t total = 0;
  for (const std::uint64_t x : stats.per_path) total += static_cast<std::int64_t>(x);
  return Rational(total, static_cast<std::int64_t>(stats.measured_slots));
}

Rational sigma(const Rational& refined, const Rational& original) {
  if (original == Rational(0)) throw UndefinedRatio("sigma: original throughput is zero");
  return refined / original;
}

Rational fairness_index(std::span<const Rational> x) {
  if (x.empty()) throw InvalidArgument("fairness: empty vector");
  Rational sum{0}, sum_sq{0};
  for (const Rational& v : x) {
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq == Rational(0)) throw InvalidArgument("fairness: all entries are zero");
  return (sum * sum) / (Rational(static_cast<std::int64_t>(x.size())) * sum_sq);
}

namespace {

Rational fairness_counts(std::span<const std::uint64_t> x) {
  std::vector<Rational> values;
  values.reserve(x.size());
  for (const std::uint64_t v : x) values.emplace_back(static_cast<std::int64_t>(v));
  return fairness_index(values);
}

}  // namespace

Rational fairness_paths(std::span<const std::uint64_t> x) { return fairness_counts(x); }

Rational fairness_od(std::span<const std::uint64_t> x) { return fairness_counts(x); }

ThroughputReport make_report(const TrafficStats& stats, double slot_seconds, double theta) {
  ThroughputReport r;
  r.packets_per_slot = throughput(stats).to_double();
  r.packets_per_second = slot_seconds > 0.0 ? r.packets_per_slot / slot_seconds : 0.0;
  r.theta = theta;
  return r;
}

}  // namespace mra
