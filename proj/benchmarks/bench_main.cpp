// Copyright 2026 The tddgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "tddgeom/hexgrid.hpp"
#include "tddgeom/macro_analytic.hpp"
#include "tddgeom/ppp_analytic.hpp"
#include "tddgeom/ppp_model.hpp"
#include "tddgeom/specfun.hpp"

using namespace tddgeom;

namespace {

PropagationParams prop(double k)
{
    PropagationParams p;
    p.k = k;
    return p;
}

TddMix half()
{
    TddMix m;
    m.alpha_d = 0.5;
    return m;
}

SmallCellScenario scenario()
{
    SmallCellScenario s;
    s.mix.alpha_d = 0.5;
    return s;
}

void BM_Omega(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::omega(1.75));
}
BENCHMARK(BM_Omega);

void BM_HurwitzZeta(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::hurwitz_zeta(3.5, 1.0 / 3.0));
}
BENCHMARK(BM_HurwitzZeta);

void BM_IsrDlDl(benchmark::State& state)
{
    double const x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(macro::isr_dl_dl(x, 1.75));
}
BENCHMARK(BM_IsrDlDl)->Arg(10)->Arg(30)->Arg(55);

void BM_MacroModelConstruct(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(macro::MacroModel(MacroNetwork{}, prop(0.4), half()));
}
BENCHMARK(BM_MacroModelConstruct)->Unit(benchmark::kMillisecond);

void BM_MacroCoverageCurve(benchmark::State& state)
{
    macro::MacroModel const m(MacroNetwork{}, prop(0.0), half());
    std::vector<double> grid;
    for (double g = -30.0; g <= 30.0; g += 2.0)
        grid.push_back(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.coverage_curve(grid, Direction::dl));
}
BENCHMARK(BM_MacroCoverageCurve)->Unit(benchmark::kMillisecond);

void BM_MacroMcDraw(benchmark::State& state)
{
    MacroNetwork net;
    net.rings = static_cast<int>(state.range(0));
    auto const sites = hexgrid::lattice_points(net);
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(hexgrid::macro_draw(net, prop(0.0), half(), Direction::ul, sites, 1, i++));
}
BENCHMARK(BM_MacroMcDraw)->Arg(4)->Arg(30);

void BM_LaplaceDl(benchmark::State& state)
{
    auto const s = scenario();
    double const v = 1.0 / s.p_eff() * 1e-3;
    for (auto _ : state)
        benchmark::DoNotOptimize(ppp::laplace_dl(v, 0.15, s));
}
BENCHMARK(BM_LaplaceDl)->Unit(benchmark::kMicrosecond);

void BM_LaplaceUl(benchmark::State& state)
{
    auto const s = scenario();
    double const v = 1.0 / s.p_star_eff() * 1e-2;
    for (auto _ : state)
        benchmark::DoNotOptimize(ppp::laplace_ul(v, 0.15, s));
}
BENCHMARK(BM_LaplaceUl)->Unit(benchmark::kMicrosecond);

void BM_PppCoverage(benchmark::State& state)
{
    auto const s = scenario();
    auto const dir = state.range(0) == 0 ? Direction::dl : Direction::ul;
    for (auto _ : state)
        benchmark::DoNotOptimize(ppp::coverage_ppp(0.0, dir, s));
}
BENCHMARK(BM_PppCoverage)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PppMcDraw(benchmark::State& state)
{
    auto const s = scenario();
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(ppp::ppp_draw(s, Direction::dl, 1, i++));
}
BENCHMARK(BM_PppMcDraw)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
