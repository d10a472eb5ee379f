#include <benchmark/benchmark.h>

#include "fatpierce/certifier.hpp"
#include "fatpierce/generator.hpp"
#include "fatpierce/oracle.hpp"
#include "fatpierce/solver.hpp"

using namespace fatpierce;

namespace {

Family family(int n, double r, Mode m, uint64_t seed) {
    GenSpec gs;
    gs.n = n;
    gs.r = r;
    gs.mode = m;
    gs.seed = seed;
    return generate(gs);
}

void BM_Pierce22(benchmark::State& state) {
    const Family f = family((int)state.range(0), 0.7, Mode::Property22, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pierce(f));
}
BENCHMARK(BM_Pierce22)->Arg(10)->Arg(40)->Arg(100);

void BM_Pierce43(benchmark::State& state) {
    const Family f = family((int)state.range(0), 0.7, Mode::Property43, 1);
    for (auto _ : state) benchmark::DoNotOptimize(pierce(f));
}
BENCHMARK(BM_Pierce43)->Arg(10)->Arg(40);

void BM_OracleExact(benchmark::State& state) {
    const Family f = family((int)state.range(0), 0.7, Mode::Property22, 2);
    for (auto _ : state) benchmark::DoNotOptimize(exact_piercing_number(f));
}
BENCHMARK(BM_OracleExact)->Arg(4)->Arg(7)->Arg(10);

void BM_CertifyClaim(benchmark::State& state) {
    const auto claims = paper_claims();
    const CoverClaim& claim = claims[state.range(0)];
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_cover(claim, 14, 0x1p-12, (int)state.range(1)));
}
BENCHMARK(BM_CertifyClaim)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {1, 4}});

void BM_Generate(benchmark::State& state) {
    GenSpec gs;
    gs.n = (int)state.range(0);
    gs.r = 0.7;
    gs.mode = Mode::Property43;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate(gs));
        ++gs.seed;
    }
}
BENCHMARK(BM_Generate)->Arg(10)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
