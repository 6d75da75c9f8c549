#include <benchmark/benchmark.h>

#include "forcelab/certify.hpp"
#include "forcelab/exact.hpp"
#include "forcelab/structure.hpp"
#include "forcelab/zero_forcing.hpp"

using namespace forcelab;

static void BM_Closure(benchmark::State& state) {
  const Graph g = aztec_diamond(static_cast<int>(state.range(0)));
  const std::vector<Vertex> set = construction_zfs(family::Aztec{static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(zf_closure(g, set));
}
BENCHMARK(BM_Closure)->Arg(3)->Arg(5)->Arg(8);

static void BM_FastClosure(benchmark::State& state) {
  const Graph g = aztec_diamond(4);
  const FastClosure fc(g);
  std::uint64_t mask = 0;
  for (Vertex v : construction_zfs(family::Aztec{4})) mask |= std::uint64_t{1} << v;
  for (auto _ : state) benchmark::DoNotOptimize(fc.close(mask));
}
BENCHMARK(BM_FastClosure);

static void BM_ZeroForcingNumber(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)), {1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(zero_forcing_number(g));
}
BENCHMARK(BM_ZeroForcingNumber)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_RationalRank(benchmark::State& state) {
  const RationalMatrix a = adjacency_rational(circulant(static_cast<int>(state.range(0)), {1, 5}));
  for (auto _ : state) benchmark::DoNotOptimize(rank_nullity(a));
}
BENCHMARK(BM_RationalRank)->Arg(24)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

static void BM_Gf2MinRank(benchmark::State& state) {
  const Graph g = cartesian_product(cycle_graph(static_cast<int>(state.range(0))), path_graph(2));
  for (auto _ : state) benchmark::DoNotOptimize(min_rank_gf2_exhaustive(g));
}
BENCHMARK(BM_Gf2MinRank)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)), {1, 2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
