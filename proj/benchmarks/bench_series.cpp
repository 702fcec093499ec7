#include <benchmark/benchmark.h>

#include "podq/congruence.hpp"
#include "podq/enumeration.hpp"
#include "podq/qproducts.hpp"

namespace {

using namespace podq;

void BM_mul_exact(benchmark::State& state) {
    const i64 order = state.range(0);
    Series a = pod2_gf(order);
    Series b = psi(order);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
    state.SetComplexityN(order);
}
BENCHMARK(BM_mul_exact)->Arg(256)->Arg(512)->Arg(1024)->Complexity(benchmark::oNSquared);

void BM_mul_mod3(benchmark::State& state) {
    const i64 order = state.range(0);
    Series a = pod2_gf(order, 3);
    Series b = psi(order, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
    state.SetComplexityN(order);
}
BENCHMARK(BM_mul_mod3)->Arg(512)->Arg(1024)->Arg(2048)->Complexity(benchmark::oNSquared);

void BM_pod2_expand_exact(benchmark::State& state) {
    const i64 order = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pod2_gf(order));
}
BENCHMARK(BM_pod2_expand_exact)->Arg(500)->Arg(1000)->Arg(2000);

void BM_pod2_expand_mod3(benchmark::State& state) {
    const i64 order = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pod2_gf(order, 3));
}
BENCHMARK(BM_pod2_expand_mod3)->Arg(2000)->Arg(8000)->Arg(20000);

void BM_invert(benchmark::State& state) {
    const i64 order = state.range(0);
    Series a = psi(order);
    for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_invert)->Arg(256)->Arg(512)->Arg(1024);

void BM_bivariate_birank_build(benchmark::State& state) {
    const i64 order = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(bivar_gf_from_products(StatTag::BirankB, order));
}
BENCHMARK(BM_bivariate_birank_build)->Arg(100)->Arg(200)->Arg(300);

void BM_family_scan_thm31(benchmark::State& state) {
    const i64 order = state.range(0);
    Series gf = pod2_gf(order, 3);
    FamilySpec spec = FamilySpec::make(FamilyTag::Thm3_1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(family_scan(spec, gf));
}
BENCHMARK(BM_family_scan_thm31)->Arg(5000)->Arg(20000);

}  // namespace

BENCHMARK_MAIN();
