#include "syang/hopf.hpp"
#include "syang/suites.hpp"

#include <benchmark/benchmark.h>

using namespace syang;

static void BM_NormalForm(benchmark::State& state)
{
    const Field f = Field::make(static_cast<std::uint32_t>(state.range(0)));
    std::uint64_t seed = 11;
    std::vector<std::vector<Generator>> words;
    for (int i = 0; i < 64; ++i) words.push_back(random_word(seed, 5, 4));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, words[i++ % words.size()]));
}
BENCHMARK(BM_NormalForm)->Arg(3)->Arg(5);

static void BM_BSeries(benchmark::State& state)
{
    const Field f = Field::make(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(b_series(f, 1, 2 * state.range(0)));
}
BENCHMARK(BM_BSeries)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CoproductT(benchmark::State& state)
{
    const Field f = Field::make(5);
    for (auto _ : state) benchmark::DoNotOptimize(coproduct_t(f, 1, 1, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CoproductT)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
