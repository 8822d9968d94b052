#include "rhombil/engine.hpp"
#include "rhombil/formulas.hpp"
#include "rhombil/lattice.hpp"

#include <benchmark/benchmark.h>

using namespace rhombil;

namespace {

RegionSpec h1(int n)
{
    RegionSpec s;
    s.family = Family::H1;
    s.x = s.y = s.z = n;
    s.seq = {n, n};
    return s;
}

void BM_CountHexagon(benchmark::State& st)
{
    RegionSpec s;
    s.family = Family::P;
    s.a = s.b = s.c = static_cast<int>(st.range(0));
    const Region r = build(s);
    for (auto _ : st) benchmark::DoNotOptimize(count_tilings(r));
    st.counters["cells"] = static_cast<double>(r.cells.size());
}
BENCHMARK(BM_CountHexagon)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CountH1(benchmark::State& st)
{
    const Region r = build(h1(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(count_tilings(r));
    st.counters["cells"] = static_cast<double>(r.cells.size());
}
BENCHMARK(BM_CountH1)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CountReference(benchmark::State& st)
{
    RegionSpec s;
    s.family = Family::P;
    s.a = 2;
    s.b = 2;
    s.c = 1;
    const Region r = build(s);
    for (auto _ : st) benchmark::DoNotOptimize(count_tilings_reference(r));
}
BENCHMARK(BM_CountReference);

void BM_FormulaH1(benchmark::State& st)
{
    const RegionSpec s = h1(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(evaluate(s).value);
}
BENCHMARK(BM_FormulaH1)->RangeMultiplier(4)->Range(1, 16);

void BM_FormulaS(benchmark::State& st)
{
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(formula_S(n, n, 3 * n, {n, n}));
}
BENCHMARK(BM_FormulaS)->RangeMultiplier(4)->Range(1, 16);

} // namespace

BENCHMARK_MAIN();
