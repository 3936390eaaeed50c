#include "causalid/random_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace causalid {

Admg random_admg(const RandomGraphConfig& config, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = config.n;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("V" + std::to_string(i));

  std::vector<NodeId> causal(n);
  std::iota(causal.begin(), causal.end(), NodeId{0});
  std::shuffle(causal.begin(), causal.end(), rng);

  std::vector<Edge> directed;
  std::vector<std::size_t> in_degree(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (in_degree[causal[j]] >= config.max_in_degree) break;
      if (unit(rng) < config.directed_density) {
        directed.push_back({causal[i], causal[j]});
        ++in_degree[causal[j]];
      }
    }
  }
  std::vector<Edge> bidirected;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (unit(rng) < config.bidirected_density) bidirected.push_back({a, b});
    }
  }
  return Admg(std::move(names), std::move(directed), std::move(bidirected));
}

}  // namespace causalid
