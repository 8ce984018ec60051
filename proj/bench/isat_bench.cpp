// Serial reference loops versus the OpenMP kernels.
//
//   isat_bench --benchmark_filter=Search

#include <benchmark/benchmark.h>

#include <vector>

#include "isat/gf2k.hpp"
#include "isat/graph.hpp"
#include "isat/saturation.hpp"
#include "isat/search.hpp"

namespace {

isat::Graph cube_cayley_graph() {
  const isat::BinaryField field(4, 0x13);
  const auto cubes = field.nonzero_cubes();
  return isat::cayley_graph(field, cubes);
}

// Odd distances on Z_64 give K_{32,32}, which is P4-free, so verification
// for n = 4 runs the pair loops over all 2016 pairs.
isat::Graph dense_circulant() {
  std::vector<int> conn;
  for (int s = 1; s < 64; s += 2) conn.push_back(s);
  return isat::circulant_graph(64, conn);
}

void BM_VerifyCayley(benchmark::State& state) {
  const auto g = cube_cayley_graph();
  isat::VerifyOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isat::verify_induced_saturated(g, 6, options));
}
BENCHMARK(BM_VerifyCayley)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_VerifyCirculant64(benchmark::State& state) {
  const auto g = dense_circulant();
  isat::VerifyOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isat::verify_induced_saturated(g, 4, options));
}
BENCHMARK(BM_VerifyCirculant64)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_SearchCayleyZ2k4(benchmark::State& state) {
  const auto space = isat::SearchSpace::cayley(4, 0x13, 6);
  for (auto _ : state) benchmark::DoNotOptimize(isat::run_search(space, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SearchCayleyZ2k4)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SearchAllGraphs6(benchmark::State& state) {
  const auto space = isat::SearchSpace::all_graphs(6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(isat::run_search(space, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SearchAllGraphs6)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FindInducedPath(benchmark::State& state) {
  const auto g = cube_cayley_graph();
  for (auto _ : state) benchmark::DoNotOptimize(isat::find_induced_path(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FindInducedPath)->DenseRange(4, 7);

}  // namespace

BENCHMARK_MAIN();
