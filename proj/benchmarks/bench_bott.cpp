#include <benchmark/benchmark.h>

#include <random>

#include "bottjoin/bott.hpp"

using namespace bottjoin;

namespace {

BottOrbifold random_orbifold(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> ram(1, 4);
    BottMatrix a(n);
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) a.set_entry(i, j, entry(rng));
    std::vector<RamPair> m;
    for (int i = 0; i < n; ++i) m.push_back(RamPair{ram(rng), ram(rng)});
    return BottOrbifold(std::move(a), std::move(m));
}

}  // namespace

static void BM_LogFano(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::vector<BottOrbifold> orbs;
    for (int i = 0; i < 128; ++i) orbs.push_back(random_orbifold(static_cast<int>(state.range(0)), rng));
    size_t i = 0;
    for (auto _ : state) {
        bool fano = is_log_fano(orbs[i++ % orbs.size()]).log_fano;
        benchmark::DoNotOptimize(fano);
    }
}
BENCHMARK(BM_LogFano)->Arg(3)->Arg(5)->Arg(7);

static void BM_FanoIndex(benchmark::State& state) {
    BottOrbifold wp(BottMatrix(1), {RamPair{49, 13}});
    for (auto _ : state) {
        FanoIndexResult fi = fano_index(wp);
        benchmark::DoNotOptimize(fi.index);
    }
}
BENCHMARK(BM_FanoIndex);

static void BM_IntersectionNumber(benchmark::State& state) {
    std::mt19937_64 rng(13);
    BottOrbifold orb = random_orbifold(6, rng);
    std::vector<int> monomial{1, 2, 3, 4, 5, 6};
    for (auto _ : state) {
        Integer v = intersection_number(monomial, orb.matrix);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_IntersectionNumber);
