#include <benchmark/benchmark.h>

#include <random>

#include "bottjoin/exact.hpp"
#include "bottjoin/polynomial.hpp"

using namespace bottjoin;

namespace {

std::vector<Polynomial> random_cubics(size_t count) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::vector<Polynomial> out;
    for (size_t i = 0; i < count; ++i) {
        std::vector<Rational> c(4);
        for (auto& v : c) v = coeff(rng);
        if (c[3] == 0) c[3] = 1;
        out.emplace_back(c);
    }
    return out;
}

}  // namespace

static void BM_SturmCountCubic(benchmark::State& state) {
    auto polys = random_cubics(256);
    size_t i = 0;
    for (auto _ : state) {
        int n = sturm_count(polys[i++ % polys.size()], Rational(0), std::nullopt);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_SturmCountCubic);

static void BM_DiscriminantQuartic(benchmark::State& state) {
    Polynomial h({Rational(564), Rational(-600), Rational(184), Rational(-24), Rational(1)});
    for (auto _ : state) {
        Rational d = discriminant(h);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DiscriminantQuartic);

static void BM_Factorize64(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Integer> ns;
    for (int i = 0; i < 64; ++i) {
        unsigned long long raw = rng() | 1ull;
        Integer n;
        mpz_import(n.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
        ns.push_back(n);
    }
    size_t i = 0;
    for (auto _ : state) {
        FactoredInteger f = factorize(ns[i++ % ns.size()]);
        benchmark::DoNotOptimize(f.cofactor);
    }
}
BENCHMARK(BM_Factorize64);

BENCHMARK_MAIN();
