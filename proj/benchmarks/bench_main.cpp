#include "takeuchi/bar_oracle.hpp"
#include "takeuchi/catalog.hpp"
#include "takeuchi/regular.hpp"

#include <benchmark/benchmark.h>

using namespace takeuchi;

namespace {

void BM_RealizeQuantumPlane(benchmark::State& st) {
    Field f7 = Field::prime(7);
    const int bound = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(quantum_plane(f7, 2, bound));
}
BENCHMARK(BM_RealizeQuantumPlane)->Arg(4)->Arg(6)->Arg(8);

void BM_RealizeCubic(benchmark::State& st) {
    Field q = Field::rationals();
    const int bound = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(realize(make_presentation(q, {"x", "y"}, {"xxy - yxx", "xyy - yyx"}, bound)));
}
BENCHMARK(BM_RealizeCubic)->Arg(6)->Arg(9);

void BM_SmashAlgebra(benchmark::State& st) {
    Field f7 = Field::prime(7);
    const int bound = static_cast<int>(st.range(0));
    auto d = quantum_plane_datum(f7, -1, bound);
    for (auto _ : st) benchmark::DoNotOptimize(smash_algebra(d.action, d.coaction, bound));
}
BENCHMARK(BM_SmashAlgebra)->Arg(6)->Arg(8);

void BM_MinimalResolution(benchmark::State& st) {
    Field q = Field::rationals();
    const int vars = static_cast<int>(st.range(0));
    std::vector<std::string> names{"x", "y", "z", "w"};
    names.resize(vars);
    auto a = polynomial_algebra(q, names, vars + 2);
    for (auto _ : st) benchmark::DoNotOptimize(minimal_resolution(trivial_module(a, Side::right), vars + 1, vars + 2));
}
BENCHMARK(BM_MinimalResolution)->DenseRange(1, 4);

void BM_ExtAlgebra(benchmark::State& st) {
    Field f7 = Field::prime(7);
    auto a = quantum_plane(f7, 2, 6);
    for (auto _ : st) {
        auto r = std::make_shared<Resolution>(minimal_resolution(trivial_module(a, Side::right), 4, 6));
        benchmark::DoNotOptimize(ext_algebra(r, 3));
    }
}
BENCHMARK(BM_ExtAlgebra);

void BM_CobarOracle(benchmark::State& st) {
    Field q = Field::rationals();
    auto a = polynomial_algebra(q, {"x", "y"}, 6);
    const int levels = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(bar_ext_oracle(a, levels, 6));
}
BENCHMARK(BM_CobarOracle)->Arg(2)->Arg(3);

void BM_VerifyExtTheorem(benchmark::State& st) {
    Field f7 = Field::prime(7);
    auto d = quantum_plane_datum(f7, -1, 6);
    auto m = trivial_hmodule(trivial_module(d.a(), Side::right), d.hopf);
    auto x = trivial_hopf_module(trivial_module(d.b(), Side::right), d.hopf);
    for (auto _ : st) benchmark::DoNotOptimize(verify_ext_theorem(d.action, d.coaction, m, x, 3, 6));
}
BENCHMARK(BM_VerifyExtTheorem)->Unit(benchmark::kMillisecond);

void BM_NakayamaTwoRoutes(benchmark::State& st) {
    Field f7 = Field::prime(7);
    auto d = quantum_plane_datum(f7, 2, 8);
    for (auto _ : st) benchmark::DoNotOptimize(nakayama_smash_check(d.action, d.coaction, 4, 8));
}
BENCHMARK(BM_NakayamaTwoRoutes)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
