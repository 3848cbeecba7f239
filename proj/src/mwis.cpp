#include "mra/mwis.hpp"

#include <algorithm>
#include <bit>

#include "mra/errors.hpp"

namespace mra {

namespace {

constexpr std::size_t kBruteForceLimit = 16;

std::vector<std::uint32_t> to_sorted_indices(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  while (mask) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

struct Solver {
  const std::vector<std::uint64_t>& adj;
  const std::vector<Rational>& weights;
  Rational best_weight{0};
  std::uint64_t best_mask = 0;
  bool have_best = false;

  void offer(std::uint64_t mask, const Rational& weight) {
    if (!have_best || best_weight < weight) {
      best_weight = weight;
      best_mask = mask;
      have_best = true;
      return;
    }
    if (weight == best_weight &&
        std::ranges::lexicographical_compare(to_sorted_indices(mask), to_sorted_indices(best_mask)))
      best_mask = mask;
  }

  // active: vertices still undecided; chosen/weight: the partial selection.
  void branch(std::uint64_t active, std::uint64_t chosen, const Rational& weight) {
    if (active == 0) {
      offer(chosen, weight);
      return;
    }
    Rational bound = weight;
    for (std::uint64_t m = active; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      bound += weights[v];
    }
    if (have_best && bound < best_weight) return;  // cannot reach, ties still explored

    // Branch on the active vertex of largest active degree.
    int pick = -1;
    int pick_degree = -1;
    for (std::uint64_t m = active; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      const int d = std::popcount(adj[v] & active);
      if (d > pick_degree) {
        pick_degree = d;
        pick = v;
      }
    }
    const std::uint64_t bit = 1ULL << pick;
    branch(active & ~bit & ~adj[pick], chosen | bit, weight + weights[pick]);
    branch(active & ~bit, chosen, weight);
  }
};

}  // namespace

std::vector<std::uint32_t> mwis_solve(const WeightedGraph& g, std::size_t max_order) {
  if (g.order > max_order || g.order > 64)
    throw CapacityError("mwis_solve: order " + std::to_string(g.order) +
                        " exceeds limit " + std::to_string(std::min<std::size_t>(max_order, 64)));
  if (g.weights.size() != g.order) throw InvalidArgument("mwis_solve: weight count mismatch");
  for (const Rational& w : g.weights)
    if (!(Rational(0) < w)) throw InvalidArgument("mwis_solve: weights must be positive");
  if (g.order == 0) return {};

  std::vector<std::uint64_t> adj(g.order, 0);
  for (const auto& [u, v] : g.edges) {
    if (u >= g.order || v >= g.order) throw InvalidArgument("mwis_solve: edge index out of range");
    if (u == v) throw InvalidArgument("mwis_solve: self-loop");
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }

  Solver solver{adj, g.weights};

  if (g.order <= kBruteForceLimit) {
    const std::uint64_t all = g.order == 64 ? ~0ULL : (1ULL << g.order) - 1;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
      bool independent = true;
      Rational weight{0};
      for (std::uint64_t m = mask; m && independent;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (adj[v] & mask) independent = false;
        else weight += g.weights[v];
      }
      if (independent) solver.offer(mask, weight);
    }
    return to_sorted_indices(solver.best_mask);
  }

  // Greedy incumbent (heaviest first) gives the bound something to cut with.
  std::vector<std::uint32_t> order(g.order);
  for (std::uint32_t v = 0; v < g.order; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (g.weights[a] != g.weights[b]) return g.weights[b] < g.weights[a];
    return a < b;
  });
  std::uint64_t greedy = 0;
  Rational greedy_weight{0};
  for (const std::uint32_t v : order)
    if ((adj[v] & greedy) == 0) {
      greedy |= 1ULL << v;
      greedy_weight += g.weights[v];
    }
  solver.offer(greedy, greedy_weight);

  const std::uint64_t all = g.order == 64 ? ~0ULL : (1ULL << g.order) - 1;
  solver.branch(all, 0, Rational{0});
  return to_sorted_indices(solver.best_mask);
}

Rational total_weight(const WeightedGraph& g, const std::vector<std::uint32_t>& vertices) {
  Rational sum{0};
  for (const std::uint32_t v : vertices) {
    if (v >= g.order) throw InvalidArgument("total_weight: index out of range");
    sum += g.weights[v];
  }
  return sum;
}

}  // namespace mra
