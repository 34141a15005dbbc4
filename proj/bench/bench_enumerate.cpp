// Serial reference vs. OpenMP table kernel for full weight enumeration.
#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <tuple>

#include "tracecodes/kernels.hpp"

using namespace tracecodes;

namespace {

const TraceCode& code_for(int p, int m, bool lprime) {
  static std::map<std::tuple<int, int, bool>, std::unique_ptr<TraceCode>> cache;
  auto& slot = cache[{p, m, lprime}];
  if (!slot) {
    auto f = std::make_shared<const ExtField>(ExtField::build(p, m));
    slot = std::make_unique<TraceCode>(f, lprime ? Variant::Lprime : Variant::L);
  }
  return *slot;
}

void BM_Reference(benchmark::State& state) {
  const auto& code = code_for(state.range(0), state.range(1), state.range(2) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_distribution_reference(code));
  state.SetItemsProcessed(state.iterations() * code.codeword_count());
}

void BM_Parallel(benchmark::State& state) {
  const auto& code = code_for(state.range(0), state.range(1), state.range(2) != 0);
  const int workers = static_cast<int>(state.range(3));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::weight_distribution_parallel(code, workers));
  state.SetItemsProcessed(state.iterations() * code.codeword_count());
}

}  // namespace

// Args: p, m, lprime.
BENCHMARK(BM_Reference)->Args({3, 3, 0})->Args({3, 3, 1})->Args({5, 2, 0})->Args({7, 2, 1})->Unit(benchmark::kMillisecond);
// Args: p, m, lprime, workers.
BENCHMARK(BM_Parallel)
    ->Args({3, 3, 0, 1})
    ->Args({3, 3, 1, 1})
    ->Args({5, 2, 0, 1})
    ->Args({7, 2, 1, 1})
    ->Args({7, 2, 1, 0})
    ->Args({3, 5, 0, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
