#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "causalid/condid.hpp"
#include "causalid/evaluate.hpp"
#include "causalid/oracle.hpp"
#include "causalid/random_graph.hpp"
#include "causalid/render.hpp"

namespace {

using namespace causalid;

Admg sparse_graph(std::size_t n, std::uint64_t seed) {
  RandomGraphConfig cfg;
  cfg.n = n;
  cfg.directed_density = 0.05;
  cfg.max_in_degree = 3;
  cfg.bidirected_density = 0.05;
  return random_admg(cfg, seed);
}

Query small_query(const Admg& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> ids(g.size());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  return {VarSet{ids[0]}, VarSet{ids[1], ids[2]}, VarSet{ids[3]}};
}

// Conditional-effect decision plus expression construction, by graph size.
void BM_ConditionalEffect(benchmark::State& state) {
  const Admg g = sparse_graph(static_cast<std::size_t>(state.range(0)), 1);
  const Query q = small_query(g, 2);
  for (auto _ : state) {
    QueryResult r = conditional_effect(g, q);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConditionalEffect)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_CComponents(benchmark::State& state) {
  const Admg g = sparse_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    auto blocks = c_components(g, g.all());
    benchmark::DoNotOptimize(blocks);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CComponents)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_RenderText(benchmark::State& state) {
  Admg g = sparse_graph(100, 4);
  QueryResult r = conditional_effect(g, small_query(g, 5));
  for (std::uint64_t seed = 6; !r.identifiable(); ++seed) r = conditional_effect(g, small_query(g, seed));
  for (auto _ : state) {
    std::string text = render(r.expression(), g.names(), RenderFormat::text);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_RenderText);

// Exact evaluation of the identified expression on one random model table.
void BM_EvaluateFixtureQuery(benchmark::State& state) {
  const Admg g({"A", "B", "X", "W", "Z", "Y"}, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {3, 5}},
               {{0, 2}, {2, 3}, {0, 5}});
  const QueryResult r = conditional_effect(g, {VarSet{2}, VarSet{5}, VarSet{3}});
  const JointTable joint = observed_joint(random_model(g, {}, 1));
  for (auto _ : state) {
    Evaluator ev(joint);
    benchmark::DoNotOptimize(ev.tabulate(r.expression()).values().data());
  }
}
BENCHMARK(BM_EvaluateFixtureQuery);

void BM_ObservedJoint(benchmark::State& state) {
  const Admg g = sparse_graph(static_cast<std::size_t>(state.range(0)), 7);
  const ScmModel m = random_model(g, {}, 1);
  for (auto _ : state) {
    JointTable t = observed_joint(m);
    benchmark::DoNotOptimize(t.probs().data());
  }
}
BENCHMARK(BM_ObservedJoint)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
