#include "joininv/linking.hpp"
#include "joininv/mvengine.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace joininv;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, int bound, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void bm_snf(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m = random_matrix(n, n, 50, 12345);
    for (auto _ : state) {
        SnfResult r = snf(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(bm_snf)->Arg(8)->Arg(16)->Arg(32);

void bm_cross_validate(benchmark::State& state) {
    JoinParams p = JoinParams::validate(state.range(0), 6, 3, 5, 4);
    for (auto _ : state) {
        InvariantReport rep = cross_validate(p);
        benchmark::DoNotOptimize(rep.checks.size());
    }
}
BENCHMARK(bm_cross_validate)->Arg(1)->Arg(3)->Arg(8);

void bm_fingerprint(benchmark::State& state) {
    JoinParams p = JoinParams::validate(2, 6, 3, 5, 4);
    for (auto _ : state) {
        Fingerprint fp = fingerprint(p);
        benchmark::DoNotOptimize(fp.key.size());
    }
}
BENCHMARK(bm_fingerprint);

} // namespace

BENCHMARK_MAIN();
