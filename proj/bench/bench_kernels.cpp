#include <benchmark/benchmark.h>

#include "freemoments/engine.hpp"

using namespace freemoments;

namespace {

void run_kernel(benchmark::State& state, const char* poly, Kernel kernel) {
  const auto order = static_cast<std::size_t>(state.range(0));
  auto q = parse_polynomial(poly);
  auto rep = build_zq_star(q);
  auto mats = reduce_rep(rep, order);
  const std::size_t t = q.degree() * order;
  for (auto _ : state) benchmark::DoNotOptimize(iterate_system(mats, rep.dim(), order, t, kernel));
  state.SetComplexityN(state.range(0));
}

void BM_Reference(benchmark::State& state) { run_kernel(state, "x1*x2 + x2*x1", Kernel::reference); }
void BM_Parallel(benchmark::State& state) { run_kernel(state, "x1*x2 + x2*x1", Kernel::parallel); }
void BM_ReferenceCubic(benchmark::State& state) { run_kernel(state, "x1^3 - 3*x1 + x2", Kernel::reference); }
void BM_ParallelCubic(benchmark::State& state) { run_kernel(state, "x1^3 - 3*x1 + x2", Kernel::parallel); }

void BM_Moments(benchmark::State& state) {
  auto p = parse_polynomial("x1*x2 + x2*x1");
  for (auto _ : state) benchmark::DoNotOptimize(moments(p, static_cast<std::size_t>(state.range(0))));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Reference)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_Parallel)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_ReferenceCubic)->RangeMultiplier(2)->Range(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelCubic)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Moments)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
