#include "syang/shifted.hpp"
#include "syang/supermod.hpp"

#include <benchmark/benchmark.h>

using namespace syang;

static SuperModule legs(Field f, int k)
{
    std::vector<SuperModule> ms;
    for (int i = 0; i < k; ++i) ms.push_back(eval_module(f.from_int(i + 1), f.from_int(1)));
    return tensor_all(ms);
}

static void BM_Tensor(benchmark::State& state)
{
    const Field f = Field::make(7);
    for (auto _ : state) benchmark::DoNotOptimize(legs(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Tensor)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_Burnside(benchmark::State& state)
{
    const Field f = Field::make(7);
    const SuperModule M = legs(f, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(M));
}
BENCHMARK(BM_Burnside)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_SimpleModule(benchmark::State& state)
{
    const Field f = Field::make(3);
    const Pyramid pi = pyramid_from({0, 0}, static_cast<std::uint32_t>(state.range(0)));
    const auto tabs = all_tableaux(pi, prime_field_elements(f));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(simple_module(pi, tabs[i++ % tabs.size()]));
}
BENCHMARK(BM_SimpleModule)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state)
{
    const Field f = Field::make(3);
    const Pyramid pi = pyramid_from({1, 0}, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classify(pi, f));
}
BENCHMARK(BM_Classify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
