#include <benchmark/benchmark.h>

#include "bottjoin/search.hpp"

using namespace bottjoin;

namespace {

SeedStructure dim7_seed() {
    return SeedStructure(7, Integer(13),
                         FamilyPolynomial::from_parts(
                             Integer(612),
                             {{Integer(1387), Integer(65790), Integer(780300)},
                              {Integer(43), Integer(1020)},
                              {Integer(11), Integer(255)}}),
                         "dim-7 family");
}

}  // namespace

static void BM_SeExtend(benchmark::State& state) {
    SeedStructure seed = dim7_seed();
    WeightPair w(49, 13), v(49, 26);
    for (auto _ : state) {
        Candidate c = se_extend(seed, w, v);
        benchmark::DoNotOptimize(c.smooth_family);
    }
}
BENCHMARK(BM_SeExtend);

static void BM_GridSearch(benchmark::State& state) {
    SeedStructure seed = dim7_seed();
    GridOptions opt;
    opt.w_max = 12;
    opt.v_max = 8;
    opt.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto found = grid_search(seed, opt);
        benchmark::DoNotOptimize(found.size());
    }
}
BENCHMARK(BM_GridSearch)->Arg(1)->Arg(4);

static void BM_YpqSearch(benchmark::State& state) {
    for (auto _ : state) {
        auto sols = ypq_csc_search(Integer(200));
        benchmark::DoNotOptimize(sols.size());
    }
}
BENCHMARK(BM_YpqSearch);
