#include <benchmark/benchmark.h>

#include "hsi/model.hpp"
#include "hsi/solvers.hpp"

namespace {

hsi::Hypergraph instance(std::size_t n, std::size_t k) {
    hsi::ModelParams params;
    params.n = n;
    params.d = 3;
    params.k = k;
    params.p = hsi::calibrate_p(n, 3, k, 0.5).p;
    params.seed = 12345;
    return hsi::sample_hypergraph(params);
}

void enumerate(benchmark::State& state, hsi::Execution execution) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<std::size_t>(state.range(1));
    const hsi::Hypergraph g = instance(n, k);
    hsi::SolveOptions options;
    options.execution = execution;
    for (auto _ : state) benchmark::DoNotOptimize(hsi::enumerate_dominating_sets(g, k, options).count);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hsi::enumerate_dominating_sets(g, k).subsets_examined));
}

void BM_EnumerateSerial(benchmark::State& state) { enumerate(state, hsi::Execution::serial); }
void BM_EnumerateParallel(benchmark::State& state) { enumerate(state, hsi::Execution::parallel); }

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Args({40, 3})->Args({60, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({40, 3})->Args({60, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
