// mwis.hpp — exact maximum weighted independent set for small graphs.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mra/rational.hpp"

namespace mra {

struct WeightedGraph {
  std::size_t order = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // unordered, no self-loops
  std::vector<Rational> weights;                               // strictly positive, one per vertex
};

// Exact solve: branch and bound seeded with a greedy incumbent, plain subset
// enumeration below a small threshold. Ties on total weight break to the
// lexicographically smallest sorted index set. Throws CapacityError when the
// order exceeds max_order — the conflict graphs this is meant for are tiny.
std::vector<std::uint32_t> mwis_solve(const WeightedGraph& g, std::size_t max_order = 64);

Rational total_weight(const WeightedGraph& g, const std::vector<std::uint32_t>& vertices);

}  // namespace mra
