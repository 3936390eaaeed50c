#ifndef CAUSALID_RANDOM_GRAPH_HPP
#define CAUSALID_RANDOM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>

#include "causalid/graph.hpp"

namespace causalid {

struct RandomGraphConfig {
  std::size_t n = 6;
  double directed_density = 0.4;  // chance of each forward pair becoming an arrow
  std::size_t max_in_degree = std::numeric_limits<std::size_t>::max();
  double bidirected_density = 0.2;  // chance of each unordered pair becoming a <-> edge
};

/// Nodes V0, V1, ... declared in index order. Arrows follow a hidden random
/// causal permutation, so declared order is not itself topological.
Admg random_admg(const RandomGraphConfig& config, std::uint64_t seed);

}  // namespace causalid

#endif  // CAUSALID_RANDOM_GRAPH_HPP
