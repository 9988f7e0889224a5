#include <random>

#include <benchmark/benchmark.h>

#include "greendecay/ensemble.hpp"
#include "greendecay/green.hpp"
#include "greendecay/oracle.hpp"
#include "greendecay/structured_lu.hpp"

namespace {

greendecay::BandedMatrix fixture(std::size_t n, std::size_t r) {
  std::mt19937_64 rng(42);
  return greendecay::random_dominant_banded(rng, n, r, r, 0.5);
}

void BM_StructuredLU(benchmark::State& state) {
  const auto a = fixture(state.range(0), state.range(1));
  for (auto _ : state) {
    auto slu = greendecay::structured_lu(a);
    benchmark::DoNotOptimize(slu);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StructuredLU)
    ->ArgsProduct({{64, 128, 256, 512}, {1, 3, 8}})
    ->Complexity();

void BM_InverseGenerators(benchmark::State& state) {
  const auto a = fixture(state.range(0), state.range(1));
  const auto slu = greendecay::structured_lu(a);
  for (auto _ : state) {
    auto gens = greendecay::inverse_green_generators(slu);
    benchmark::DoNotOptimize(gens);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InverseGenerators)
    ->ArgsProduct({{64, 128, 256, 512}, {1, 3, 8}})
    ->Complexity();

void BM_DenseInverse(benchmark::State& state) {
  const auto a = fixture(state.range(0), 3);
  for (auto _ : state) {
    auto inv = greendecay::oracle::dense_inverse(a.dense());
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_DenseInverse)->Arg(64)->Arg(128)->Arg(256);

void BM_Reconstruct(benchmark::State& state) {
  const auto gens =
      greendecay::inverse_green_generators(fixture(state.range(0), 3));
  for (auto _ : state) {
    auto rec = greendecay::reconstruct_lower(gens);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_Reconstruct)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
