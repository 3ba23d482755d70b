// Serial reference kernels against their OpenMP counterparts.

#include "bcs/census.hpp"
#include "bcs/kernels.hpp"
#include "bcs/numtheory.hpp"

#include <benchmark/benchmark.h>

using namespace bcs;

namespace {

std::vector<std::uint8_t> primitive_flags(const FieldPtr& F, unsigned d) {
    std::vector<std::uint8_t> flags(checked_pow(F->size(), d));
    for (std::uint64_t i = 0; i < flags.size(); ++i) flags[i] = is_primitive(monic_from_index(F, d, i));
    return flags;
}

// Arg 0 selects the case, arg 1 the worker count (-1 = serial reference).
const std::tuple<std::uint32_t, unsigned, unsigned> kFiberCases[] = {{2, 2, 3}, {3, 2, 2}, {2, 3, 2}};

void BM_FiberTally(benchmark::State& state) {
    const auto [q, m, n] = kFiberCases[state.range(0)];
    const auto F = Field::prime(q);
    const auto prim = primitive_flags(F, m * n);
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto t = workers < 0 ? kernels::fiber_tally_serial(*F, m, n, prim) : kernels::fiber_tally(*F, m, n, prim, workers);
        benchmark::DoNotOptimize(t.singer_by_order);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(checked_pow(q, m * m * n)));
    state.SetLabel(workers < 0 ? "serial" : "omp");
}

void BM_OrderedBases(benchmark::State& state) {
    const auto [q, m, n] = kFiberCases[state.range(0)];
    const FieldTower T = tower_for(q, m, n);
    const Elem alpha = default_alpha(T);
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto N = workers < 0 ? count_ordered_bases_N_serial(T, alpha) : count_ordered_bases_N(T, alpha, {kDefaultCeiling, workers});
        benchmark::DoNotOptimize(N);
    }
    state.SetLabel(workers < 0 ? "serial" : "omp");
}

void BM_Coprime(benchmark::State& state) {
    const auto F = Field::prime(3);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto k = workers < 0 ? kernels::coprime_monic_serial(F, 3, 3) : kernels::coprime_monic(F, 3, 3, workers);
        benchmark::DoNotOptimize(k);
    }
    state.SetLabel(workers < 0 ? "serial" : "omp");
}

void BM_Toeplitz(benchmark::State& state) {
    const auto F = Field::prime(3);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto k = workers < 0 ? kernels::toeplitz_nonsingular_serial(*F, 4) : kernels::toeplitz_nonsingular(*F, 4, workers);
        benchmark::DoNotOptimize(k);
    }
    state.SetLabel(workers < 0 ? "serial" : "omp");
}

void worker_grid(benchmark::internal::Benchmark* b, bool with_case) {
    for (int c = 0; c < (with_case ? 3 : 1); ++c)
        for (int w : {-1, 1, 2, 4, 8}) with_case ? b->Args({c, w}) : b->Arg(w);
}

} // namespace

BENCHMARK(BM_FiberTally)->Apply([](auto* b) { worker_grid(b, true); })->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OrderedBases)->Apply([](auto* b) { worker_grid(b, true); })->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Coprime)->Apply([](auto* b) { worker_grid(b, false); })->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Toeplitz)->Apply([](auto* b) { worker_grid(b, false); })->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
