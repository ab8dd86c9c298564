#include <benchmark/benchmark.h>

#include "plinth/actions.hpp"
#include "plinth/autgq.hpp"
#include "plinth/classical.hpp"
#include "plinth/generator_file.hpp"
#include "plinth/orbital.hpp"

namespace plinth {
namespace {

PermGroup m12() {
  static const GeneratorFile file = load_generators(std::string(PLINTH_DATA_DIR) + "/m12.gens");
  return PermGroup(file.degree, file.generators);
}

void BM_SchreierSimsSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PermGroup s = symmetric_group(n);
  for (auto _ : state) {
    PermGroup g(n, s.generators());
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(12)->Arg(20);  // 20! is the largest that fits in Order

void BM_SchreierSimsM12(benchmark::State& state) {
  GeneratorFile file = load_generators(std::string(PLINTH_DATA_DIR) + "/m12.gens");
  for (auto _ : state) {
    PermGroup g(file.degree, file.generators);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsM12);

void BM_AutomorphismSearchGQ(benchmark::State& state) {
  ColoredGraph incidence = incidence_graph(symplectic_gq(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) {
    auto result = automorphism_search(incidence);
    benchmark::DoNotOptimize(result.nodes);
  }
}
BENCHMARK(BM_AutomorphismSearchGQ)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CosetActionM12(benchmark::State& state) {
  PermGroup g = m12();
  // Stabilizer of two points, index 132.
  std::vector<Point> points{0, 1};
  SubgroupRef h = pointwise_stabilizer(g, points);
  for (auto _ : state) {
    auto action = coset_action(g, h);
    benchmark::DoNotOptimize(action.group.degree());
  }
}
BENCHMARK(BM_CosetActionM12)->Unit(benchmark::kMillisecond);

void BM_SuborbitsA6On36(benchmark::State& state) {
  PermGroup full = psl2_action(9, Psl2Flavor::kPGammaL);
  PermGroup g = cyclic_class_action(full, derived_subgroup(full), 5).group;
  for (auto _ : state) {
    auto data = suborbits(g, 0);
    benchmark::DoNotOptimize(data.suborbits.size());
  }
}
BENCHMARK(BM_SuborbitsA6On36);

}  // namespace
}  // namespace plinth

BENCHMARK_MAIN();
