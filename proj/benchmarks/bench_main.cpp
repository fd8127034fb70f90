#include <benchmark/benchmark.h>

#include "hilbcount/boards.hpp"
#include "hilbcount/walks.hpp"

using namespace hilbcount;

static void BM_KnightPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze(StepSet::knight()));
}
BENCHMARK(BM_KnightPipeline)->Unit(benchmark::kMillisecond);

static void BM_ToricKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(toric_kernel(StepSet::knight()));
}
BENCHMARK(BM_ToricKernel)->Unit(benchmark::kMillisecond);

// Branch and bound on an n x n queen board with k = n.
static void BM_QueensMaxFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = attack_graph({n, Piece::Queen, {}, OwnSquareMode::PaperLiteral});
  for (auto _ : state) benchmark::DoNotOptimize(max_free(g, n, {0, state.range(1) != 0, 1}));
}
BENCHMARK(BM_QueensMaxFree)->Args({6, 1})->Args({7, 1})->Args({8, 1})->Args({6, 0})->Unit(benchmark::kMillisecond);

static void BM_QueensProfile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = attack_graph({n, Piece::Queen, {}, OwnSquareMode::PaperLiteral});
  for (auto _ : state) benchmark::DoNotOptimize(free_profile(g, static_cast<std::size_t>(state.range(1)), 0, {0, true, 1}));
}
BENCHMARK(BM_QueensProfile)->Args({6, 4})->Args({7, 4})->Args({8, 3})->Unit(benchmark::kMillisecond);

// Bigraded recursion on the board ideal.
static void BM_HilbertRoute(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = attack_graph({n, Piece::Queen, {}, OwnSquareMode::PaperLiteral});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_route(g));
}
BENCHMARK(BM_HilbertRoute)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_HfTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = attack_graph({n, Piece::Queen, {}, OwnSquareMode::PaperLiteral});
  for (auto _ : state) benchmark::DoNotOptimize(hf_table(g, 0, n * n, 0, {0, true, 1}));
}
BENCHMARK(BM_HfTable)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
