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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "../oracles.hpp"
#include "tddgeom/errors.hpp"
#include "tddgeom/ppp_analytic.hpp"
#include "tddgeom/ppp_model.hpp"

using namespace tddgeom;
namespace pp = tddgeom::ppp;

namespace {

constexpr double kPi = std::numbers::pi;

SmallCellScenario scenario(double alpha_d, double lambda = 10.0)
{
    SmallCellScenario s;
    s.lambda = lambda;
    s.window_radius = SmallCellScenario::default_window(lambda);
    s.mix.alpha_d = alpha_d;
    return s;
}

/// exp(-lambda pi^2 c^{1/b} / (b sin(pi/b))): Laplace transform of the
/// Rayleigh-faded interference of a full-plane PPP with power c/v.
double full_plane_laplace(double lambda, double c, double b)
{
    return std::exp(-lambda * kPi * kPi * std::pow(c, 1.0 / b) / (b * std::sin(kPi / b)));
}

}  // namespace

TEST(PppSampling, PoissonCountAndUniformRadius)
{
    double const lambda = 10.0, w = 2.0;
    std::vector<double> counts;
    std::vector<double> r2;
    for (std::uint64_t s = 0; s < 400; ++s)
    {
        auto const pts = pp::sample_ppp(lambda, w, 1000 + s);
        counts.push_back(static_cast<double>(pts.size()));
        for (auto const& p : pts)
        {
            ASSERT_LE(std::abs(p), w);
            r2.push_back(std::norm(p) / (w * w));
        }
    }
    auto const m = oracle::moments(counts);
    EXPECT_LT(std::abs(m.mean - lambda * kPi * w * w) / m.se, 4.0);
    // |z|^2 / w^2 is uniform on [0, 1].
    std::sort(r2.begin(), r2.end());
    double ks = 0.0;
    double const n = static_cast<double>(r2.size());
    for (std::size_t i = 0; i < r2.size(); ++i)
        ks = std::max({ks, std::abs((i + 1) / n - r2[i]), std::abs(r2[i] - i / n)});
    EXPECT_LT(ks, 1.63 / std::sqrt(n));
}

TEST(PppSampling, SameSeedSamePoints)
{
    EXPECT_EQ(pp::sample_ppp(5.0, 3.0, 9), pp::sample_ppp(5.0, 3.0, 9));
    EXPECT_NE(pp::sample_ppp(5.0, 3.0, 9), pp::sample_ppp(5.0, 3.0, 10));
}

TEST(PppSampling, RayleighInverseCdf)
{
    double const lambda = 10.0;
    for (double u : {0.01, 0.3, 0.5, 0.9, 0.999})
    {
        double const r = pp::sample_rayleigh(lambda, u);
        double const cdf = 1.0 - std::exp(-lambda * kPi * r * r);
        EXPECT_TRUE(std::abs(cdf - u) < 1e-12 || std::abs(cdf - (1.0 - u)) < 1e-12) << u;
    }
}

TEST(PppSampling, RayleighMean)
{
    double const lambda = 10.0;
    oracle::SplitMix rng(3);
    std::vector<double> v(200000);
    for (auto& x : v)
        x = pp::sample_rayleigh(lambda, rng.uniform());
    auto const m = oracle::moments(v);
    EXPECT_LT(std::abs(m.mean - 0.5 / std::sqrt(lambda)) / m.se, 4.0);
}

TEST(PppSampling, DisplacementKeepsCountAndLaw)
{
    double const lambda = 10.0;
    auto const users = pp::sample_ppp(lambda, 6.0, 77);
    auto const cells = pp::displace_cells(users, lambda, 77);
    ASSERT_EQ(users.size(), cells.size());
    std::vector<double> d;
    for (std::size_t i = 0; i < users.size(); ++i)
        d.push_back(std::abs(cells[i] - users[i]));
    auto const m = oracle::moments(d);
    EXPECT_LT(std::abs(m.mean - 0.5 / std::sqrt(lambda)) / m.se, 4.0);
}

TEST(PppLaplace, ZeroArgumentIsOne)
{
    auto const s = scenario(0.5);
    EXPECT_EQ(pp::laplace_dl(0.0, 0.2, s), 1.0);
    EXPECT_EQ(pp::laplace_ul(0.0, 0.2, s), 1.0);
}

TEST(PppLaplace, FullPlaneLimitIgnoresDisplacement)
{
    // At r = 0 a displaced PPP is again a PPP of the same intensity.
    auto const dl = scenario(1.0);
    double const v = 1.0 / dl.p_eff() * 0.05;
    EXPECT_NEAR(pp::laplace_dl(v, 0.0, dl), full_plane_laplace(10.0, v * dl.p_eff(), 1.75), 1e-6);
    auto ul = scenario(0.0);
    ul.prop.k = 0.0;
    double const vu = 1.0 / ul.p_star_eff() * 0.05;
    EXPECT_NEAR(pp::laplace_ul(vu, 0.0, ul), full_plane_laplace(10.0, vu * ul.p_star_eff(), 1.75), 1e-6);
}

TEST(PppLaplace, CrossTermMatchesRadialOracle)
{
    // DL receiver with only UL interferers: they sit on the PPP points beyond
    // r with power P* rho^{2bk}, rho Rayleigh.
    auto const s = scenario(0.0);
    double const r = 0.15, b = 1.75, bk = b * 0.4;
    double const v = 0.5 * std::pow(r, 3.5) / s.p_eff();
    double const c = v * s.p_star_eff();
    double const ell = 1.0 / std::sqrt(kPi * 10.0);
    auto over_u = [&](double u) {
        double const cw = c * std::pow(ell * std::sqrt(u), 2.0 * bk);
        // int_r^inf 2 pi x cw/(cw + x^{2b}) dx through x = r/s.
        auto radial = [&](double t) {
            double const x = r / t;
            return 2.0 * kPi * x * cw / (cw + std::pow(x, 2.0 * b)) * r / (t * t);
        };
        return std::exp(-u) * oracle::gauss_legendre(radial, 0.0, 1.0, 200);
    };
    double const exponent = 10.0 * oracle::gauss_legendre(over_u, 0.0, 40.0, 400);
    pp::AnalyticOptions tight;
    tight.quad.inner_abs_tol = 1e-11;
    tight.quad.max_intervals = 2000;
    EXPECT_NEAR(pp::laplace_dl(v, r, s, tight), std::exp(-exponent), 1e-7);
}

TEST(PppLaplace, DecreasingAndLogConvexInV)
{
    auto const s = scenario(0.5);
    for (auto dir : {Direction::dl, Direction::ul})
    {
        double const r = 0.2;
        double const p = dir == Direction::dl ? s.p_eff() : s.p_star_eff();
        std::vector<double> lv;
        for (int i = 0; i <= 6; ++i)
        {
            double const v = i * 0.5 / p;
            lv.push_back(std::log(dir == Direction::dl ? pp::laplace_dl(v, r, s) : pp::laplace_ul(v, r, s)));
        }
        for (std::size_t i = 1; i < lv.size(); ++i)
            EXPECT_LT(lv[i], lv[i - 1]);
        for (std::size_t i = 1; i + 1 < lv.size(); ++i)
            EXPECT_GE(lv[i + 1] - 2.0 * lv[i] + lv[i - 1], -1e-6);
    }
}

TEST(PppLaplace, FullPlaneMixture)
{
    // r = 0, k = 0: both transmitter classes are thinned PPPs of the plane.
    auto s = scenario(0.5);
    s.prop.k = 0.0;
    double const v = 0.02 / s.p_eff();
    double const b = 1.75;
    double const unit = -std::log(full_plane_laplace(10.0, 1.0, b));
    double const expected = std::exp(-unit * (0.5 * std::pow(v * s.p_eff(), 1.0 / b) +
                                              0.5 * std::pow(v * s.p_star_eff(), 1.0 / b)));
    EXPECT_NEAR(pp::laplace_dl(v, 0.0, s), expected, 1e-6);
    EXPECT_NEAR(pp::laplace_ul(v, 0.0, s), expected, 1e-6);
}

TEST(PppLaplace, VanishingDensityLimit)
{
    auto s = scenario(0.5, 1e-4);
    s.prop.k = 0.0;
    double const v = 1.0 / s.p_eff();
    EXPECT_GT(pp::laplace_dl(v, 0.0, s), 0.999);
    EXPECT_GT(pp::laplace_ul(v, 0.0, s), 0.999);
}

TEST(PppLaplace, ReducedMatchesNested)
{
    auto const s = scenario(0.5);
    pp::AnalyticOptions nested;
    nested.method = pp::LaplaceMethod::nested;
    double const r = 0.2;
    double const vd = std::pow(r, 3.5) / s.p_eff();
    double const vu = std::pow(r, 3.5 * 0.6) / s.p_star_eff();
    EXPECT_NEAR(pp::laplace_dl(vd, r, s), pp::laplace_dl(vd, r, s, nested), 1e-5);
    EXPECT_NEAR(pp::laplace_ul(vu, r, s), pp::laplace_ul(vu, r, s, nested), 1e-5);
}

TEST(PppLaplace, MatchesMonteCarlo)
{
    auto const s = scenario(0.5);
    double const r = 0.15;
    double const vd = std::pow(r, 3.5) / s.p_eff();
    auto const est = pp::mc_laplace_ppp(vd, r, s, Direction::dl, 4000, 5);
    EXPECT_LT(std::abs(pp::laplace_dl(vd, r, s) - est.value), 4.0 * est.std_error + 1e-3);
}

TEST(PppLaplace, RejectsBadArguments)
{
    auto const s = scenario(0.5);
    EXPECT_THROW(pp::laplace_dl(-1.0, 0.1, s), DomainError);
    EXPECT_THROW(pp::laplace_dl(1.0, -0.1, s), DomainError);
    SmallCellScenario bad = s;
    bad.window_radius = 0.1;
    EXPECT_THROW(pp::laplace_dl(1.0, 0.1, bad), DomainError);
}

TEST(PppCoverage, MonotoneInThreshold)
{
    auto const s = scenario(0.5);
    std::vector<double> grid{-20.0, -10.0, 0.0, 10.0, 20.0};
    for (auto dir : {Direction::dl, Direction::ul})
    {
        auto const c = pp::coverage_curve_ppp(grid, dir, s);
        for (std::size_t i = 0; i < c.size(); ++i)
        {
            EXPECT_GE(c.value[i], 0.0);
            EXPECT_LE(c.value[i], 1.0);
            if (i > 0)
            {
                EXPECT_LT(c.value[i], c.value[i - 1]);
            }
        }
    }
}

TEST(PppCoverage, DecreasingInNoisePower)
{
    auto quiet = scenario(0.5);
    auto loud = quiet;
    loud.prop.p_noise_dbm = -80.0;
    quiet.prop.p_noise_dbm = -110.0;
    for (auto dir : {Direction::dl, Direction::ul})
    {
        double const base = pp::coverage_ppp(0.0, dir, scenario(0.5));
        EXPECT_GT(pp::coverage_ppp(0.0, dir, quiet), base);
        EXPECT_LT(pp::coverage_ppp(0.0, dir, loud), base);
    }
}

TEST(PppCoverage, IndoorNoWorseThanOutdoorGap)
{
    auto out = scenario(1.0);
    auto in = out;
    in.prop.a_db = 160.0;
    EXPECT_LT(pp::coverage_ppp_dl(-10.0, in), pp::coverage_ppp_dl(-10.0, out));
}

TEST(PppCoverage, DynamicTddHurtsUplink)
{
    for (double g : {-10.0, 0.0, 10.0})
        EXPECT_LE(pp::coverage_ppp_ul(g, scenario(0.5)), pp::coverage_ppp_ul(g, scenario(0.0)));
}

TEST(PppCoverage, NoPowerControlMatchesUnitWeight)
{
    // k = 0 with P* = P: UL and DL at alpha_d = 0.5 see the same mixture.
    auto s = scenario(0.5);
    s.prop.k = 0.0;
    s.p_small_star_dbm = s.p_small_dbm;
    for (double g : {-5.0, 5.0})
        EXPECT_NEAR(pp::coverage_ppp_ul(g, s), pp::coverage_ppp_dl(g, s), 2e-4);
}

TEST(PppCoverage, McMonotoneAndWorkerInvariant)
{
    auto const s = scenario(0.5);
    std::vector<double> grid{-10.0, 0.0, 10.0};
    pp::PppMcOptions o1, o3;
    o1.workers = 1;
    o3.workers = 3;
    for (auto dir : {Direction::dl, Direction::ul})
    {
        auto const a = pp::mc_coverage_ppp(s, dir, grid, 600, 17, o1);
        auto const b = pp::mc_coverage_ppp(s, dir, grid, 600, 17, o3);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.ci_halfwidth, b.ci_halfwidth);
        EXPECT_GE(a.value[0], a.value[1]);
        EXPECT_GE(a.value[1], a.value[2]);
    }
}

TEST(PppDraws, DecompositionAndFarField)
{
    auto const s = scenario(0.5);
    for (std::uint64_t i = 0; i < 50; ++i)
    {
        auto const with = pp::ppp_draw(s, Direction::ul, 3, i, std::nullopt, true);
        auto const without = pp::ppp_draw(s, Direction::ul, 3, i, std::nullopt, false);
        EXPECT_GT(with.i_far, 0.0);
        EXPECT_EQ(without.i_far, 0.0);
        EXPECT_EQ(with.i_same, without.i_same);
        EXPECT_EQ(with.i_cross, without.i_cross);
        EXPECT_NEAR(with.sinr, with.signal / (with.i_same + with.i_cross + with.i_far + with.noise),
                    1e-12 * with.sinr);
    }
}

TEST(PppDraws, FixedServingDistance)
{
    auto const s = scenario(0.5);
    auto const d = pp::ppp_draw(s, Direction::dl, 1, 0, 0.123);
    EXPECT_EQ(d.r, 0.123);
}

TEST(PppAse, StepCoverageGivesShannonRate)
{
    double const c = 7.0;
    double const v = pp::ase_from_coverage([&](double g) { return g < c ? 1.0 : 0.0; });
    EXPECT_NEAR(v, std::log2(1.0 + c), 2e-4);
}

TEST(PppAse, AnalyticMatchesMonteCarlo)
{
    auto const s = scenario(0.5);
    double const a = pp::ase(s, Direction::dl);
    auto const m = pp::mc_ase_ppp(s, Direction::dl, 4000, 23);
    EXPECT_LT(std::abs(a - m.value), 4.0 * m.std_error);
}

TEST(PppAse, McWorkerInvariant)
{
    auto const s = scenario(0.5);
    pp::PppMcOptions o1, o2;
    o1.workers = 1;
    o2.workers = 2;
    auto const a = pp::mc_ase_ppp(s, Direction::ul, 500, 4, o1);
    auto const b = pp::mc_ase_ppp(s, Direction::ul, 500, 4, o2);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.std_error, b.std_error);
}
