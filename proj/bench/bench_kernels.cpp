#include <benchmark/benchmark.h>

#include "lyn/graph.hpp"
#include "lyn/kernels.hpp"
#include "lyn/stirling.hpp"

using namespace lyn;

namespace {

// args: n, length
void BM_TallySerial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::tally_serial(n, len, Interpretation::kStrictDecreasing));
}

void BM_TallyParallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::tally_parallel(n, len, Interpretation::kStrictDecreasing));
}

void BM_TallyGf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(stirling_gf(len, n));
}

// Chordless cycles are never represented, so the whole space is scanned.
// args: n, cycle length
void BM_WitnessSerial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto order = static_cast<int>(state.range(1));
  auto masks = cycle_graph(order).adjacency_masks();
  auto total = word_space_size(n, order, ~0ULL);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_witness_serial(masks, n, total));
}

void BM_WitnessParallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto order = static_cast<int>(state.range(1));
  auto masks = cycle_graph(order).adjacency_masks();
  auto total = word_space_size(n, order, ~0ULL);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_witness_parallel(masks, n, total));
}

void BM_CertificatesSerial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto len = static_cast<std::size_t>(state.range(1));
  auto total = word_space_size(n, len, ~0ULL);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::certificates_serial(n, len, total));
}

void BM_CertificatesParallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto len = static_cast<std::size_t>(state.range(1));
  auto total = word_space_size(n, len, ~0ULL);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::certificates_parallel(n, len, total));
}

}  // namespace

BENCHMARK(BM_TallySerial)->Args({2, 16})->Args({3, 11})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->Args({2, 16})->Args({3, 11})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TallyGf)->Args({2, 16})->Args({3, 11})->Args({3, 40})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessSerial)->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WitnessParallel)->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CertificatesSerial)->Args({3, 7})->Args({2, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificatesParallel)->Args({3, 7})->Args({2, 12})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
