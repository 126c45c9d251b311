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

// Acceptance criteria C1-C12. Prints one PASS/FAIL line per criterion;
// exit status is nonzero when any selected criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "tddgeom/coverage.hpp"
#include "tddgeom/hexgrid.hpp"
#include "tddgeom/macro_analytic.hpp"
#include "tddgeom/model.hpp"
#include "tddgeom/ppp_analytic.hpp"
#include "tddgeom/ppp_model.hpp"
#include "tddgeom/specfun.hpp"

using namespace tddgeom;

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Outcome
{
    bool passed = false;
    std::string detail;
};

std::string fmt(char const* format, ...) __attribute__((format(printf, 1, 2)));

std::string fmt(char const* format, ...)
{
    char buf[1024];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

std::vector<double> range(double lo, double hi, double step)
{
    std::vector<double> out;
    for (double g = lo; g <= hi + 1e-9; g += step)
        out.push_back(g);
    return out;
}

PropagationParams table1(double two_b, double k)
{
    PropagationParams p;
    p.two_b = two_b;
    p.k = k;
    return p;
}

MacroNetwork network(int rings)
{
    MacroNetwork n;
    n.rings = rings;
    return n;
}

TddMix mix(double alpha_d)
{
    TddMix m;
    m.alpha_d = alpha_d;
    return m;
}

SmallCellScenario small_cells(double alpha_d, double lambda = 10.0, double a_db = 130.0)
{
    SmallCellScenario s;
    s.lambda = lambda;
    s.window_radius = SmallCellScenario::default_window(lambda);
    s.mix.alpha_d = alpha_d;
    s.prop.a_db = a_db;
    return s;
}

// ------------------------------------------------------------------ C1

Outcome c1()
{
    double const e35 = rel(hexgrid::lattice_sum(3.5, network(500)), 6.0 * specfun::omega(1.75));
    double const e25 = rel(hexgrid::lattice_sum(2.5, network(500)), 6.0 * specfun::omega(1.25));
    return {e35 <= 1e-6 && e25 <= 1e-3,
            fmt("500 rings + tail vs 6 omega: 2b=3.5 rel %.2e (<= 1e-6), 2b=2.5 rel %.2e (<= 1e-3)", e35, e25)};
}

// ------------------------------------------------------------------ C2

Outcome c2()
{
    double worst = 0.0;
    for (double b : {1.25, 1.75})
        for (double k : {0.0, 0.4, 1.0})
            for (double q : {0.3, 1.0 / std::sqrt(3.0)})
            {
                double const lhs = 6.0 * std::pow(q, 2.0 * b * k) * macro::beta_h(0, b, k, q);
                worst = std::max(worst, rel(lhs, macro::a1(b, k, q)));
            }
    return {worst <= 1e-10, fmt("max rel |6 q^{2bk} beta_0 - A1| / A1 = %.2e over 12 points (<= 1e-10)", worst)};
}

// ------------------------------------------------------------------ C3

Outcome c3()
{
    MacroNetwork const net = network(30);
    PropagationParams const prop = table1(3.5, 0.4);
    double const x = 0.4;
    auto const est = hexgrid::bruteforce_isr_ul_dl({x * net.delta, 0.0}, net, prop, 1000000, kSeed);
    double const series =
        macro::isr_ul_dl(x, 1.75, 0.4, net.r_over_delta(), prop.p_star_eff() / prop.p_eff(), net.delta);
    double const z = std::abs(series - est.value) / est.std_error;
    return {z <= 3.0, fmt("series %.8g, MC %.8g +- %.2g (1e6 samples, 30 rings + tail): %.2f SE (<= 3)", series,
                          est.value, est.std_error, z)};
}

// ------------------------------------------------------------------ C4

Outcome c4()
{
    double worst_u = 0.0, worst_d = 0.0, worst_s04 = 0.0, worst_s05 = 0.0;
    for (double ad : {1.0, 0.75, 0.5})
        for (double k : {0.0, 0.4, 0.8})
        {
            macro::MacroModel const m(network(4), table1(3.5, k), mix(ad));
            for (double x = 0.01; x <= macro::MacroModel::x_max(); x += 0.01)
            {
                worst_u = std::max(worst_u, rel(m.inv_u(m.u(x)), x));
                double const y = m.d(x);
                double const xb = m.inv_d(y, macro::InverseMethod::bisection);
                worst_d = std::max(worst_d, rel(m.d(xb), y));
                if (x <= 0.5 + 1e-12)
                {
                    double const e = rel(m.inv_d(y, macro::InverseMethod::series), xb);
                    (x <= 0.4 + 1e-12 ? worst_s04 : worst_s05) =
                        std::max(x <= 0.4 + 1e-12 ? worst_s04 : worst_s05, e);
                }
            }
        }
    bool const ok = worst_u <= 1e-12 && worst_d <= 1e-10 && worst_s04 <= 0.02 && worst_s05 <= 0.05;
    return {ok, fmt("inv_u rel %.1e (<= 1e-12); d(inv_d) rel %.1e (<= 1e-10); series vs bisection "
                    "%.2f%% for x <= 0.4 (<= 2%%), %.2f%% for 0.4 < x <= 0.5 (adjusted <= 5%%)",
                    worst_u, worst_d, 100.0 * worst_s04, 100.0 * worst_s05)};
}

// ------------------------------------------------------------------ C5

Outcome c5()
{
    MacroNetwork const net = network(30);
    PropagationParams const prop = table1(3.5, 0.0);
    auto const grid = range(-30.0, 30.0, 2.0);
    std::string detail;
    bool ok = true;
    std::pair<double, Direction> const cases[] = {{1.0, Direction::dl}, {0.5, Direction::dl}, {0.5, Direction::ul}};
    for (auto const& [ad, dir] : cases)
    {
        macro::MacroModel const model(net, prop, mix(ad));
        auto const a = model.coverage_curve(grid, dir);
        auto const m = hexgrid::mc_coverage_macro(net, prop, mix(ad), dir, grid, 20000, kSeed);
        double sup = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            sup = std::max(sup, std::abs(a.value[i] - m.value[i]));
        ok = ok && sup <= 0.03;
        detail += fmt("(%g,%s) sup %.4f; ", ad, to_string(dir).data(), sup);
    }
    return {ok, detail + "bound 0.03"};
}

// ------------------------------------------------------------------ C6

CoverageCurve ul_coverage_mc(double two_b, double alpha_d, double gamma_db)
{
    return hexgrid::mc_coverage_macro(network(4), table1(two_b, 0.0), mix(alpha_d), Direction::ul, {gamma_db}, 20000,
                                      kSeed);
}

Outcome c6()
{
    std::string detail;
    double drop35 = 0.0;
    for (double two_b : {3.5, 2.5})
    {
        auto const s = ul_coverage_mc(two_b, 0.0, -20.0);
        auto const d = ul_coverage_mc(two_b, 0.5, -20.0);
        double const drop = 100.0 * (s.value[0] - d.value[0]);
        // 95% half-widths of the two independent estimates combined.
        double const hw = 100.0 * std::hypot(s.ci_halfwidth[0], d.ci_halfwidth[0]);
        macro::MacroModel const ms(network(4), table1(two_b, 0.0), mix(0.0));
        macro::MacroModel const md(network(4), table1(two_b, 0.0), mix(0.5));
        double const analytic = 100.0 * (ms.coverage(-20.0, Direction::ul) - md.coverage(-20.0, Direction::ul));
        if (two_b == 3.5)
            drop35 = drop;
        detail += fmt("2b=%g: MC %.2f%% -> %.2f%%, drop %.2f +- %.2f pp (analytic %.2f pp); ", two_b,
                      100.0 * s.value[0], 100.0 * d.value[0], drop, hw, analytic);
    }
    bool const ok = std::abs(drop35 - 80.0) <= 10.0;
    return {ok, detail + "gate on 2b=3.5 MC: 80 +- 10 pp (20000 draws, 4 rings)"};
}

// ------------------------------------------------------------------ C7

Outcome c7()
{
    auto const grid = range(-20.0, 10.0, 1.0);
    std::vector<macro::MacroModel> models;
    for (double k : {0.0, 0.4, 0.8, 1.0})
        models.emplace_back(network(4), table1(3.5, k), mix(0.5));
    double dl_spread = 0.0;
    bool ul_decreasing = true;
    double min_step = std::numeric_limits<double>::infinity();
    for (double g : grid)
    {
        double lo = 1.0, hi = 0.0;
        for (auto const& m : models)
        {
            double const c = m.coverage(g, Direction::dl);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        dl_spread = std::max(dl_spread, hi - lo);
        for (std::size_t i = 1; i < models.size(); ++i)
        {
            double const step = models[i - 1].coverage(g, Direction::ul) - models[i].coverage(g, Direction::ul);
            min_step = std::min(min_step, step);
            ul_decreasing = ul_decreasing && step > 0.0;
        }
    }
    bool const ok = dl_spread <= 0.01 && ul_decreasing;
    return {ok, fmt("DL spread across k %.3f pp (<= 1 pp); UL strictly decreasing in k on [-20, 10] dB: %s "
                    "(smallest step %.2e)",
                    100.0 * dl_spread, ul_decreasing ? "yes" : "no", min_step)};
}

// ------------------------------------------------------------------ C8

Outcome c8()
{
    auto const grid = range(-30.0, 30.0, 5.0);
    std::string detail;
    bool ok = true;
    std::pair<double, Direction> const cases[] = {
        {1.0, Direction::dl}, {0.5, Direction::dl}, {0.5, Direction::ul}, {0.0, Direction::ul}};
    for (auto const& [ad, dir] : cases)
    {
        auto const scn = small_cells(ad);
        auto const a = ppp::coverage_curve_ppp(grid, dir, scn);
        auto const m = ppp::mc_coverage_ppp(scn, dir, grid, 100000, kSeed);
        double sup = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            sup = std::max(sup, std::abs(a.value[i] - m.value[i]));
        ok = ok && sup <= 0.05;
        detail += fmt("(%g,%s) sup %.4f; ", ad, to_string(dir).data(), sup);
    }
    return {ok, detail + "bound 0.05, 1e5 draws"};
}

// ------------------------------------------------------------------ C9

/// Interference-limited nearest-BS Rayleigh coverage, 2b = 4, by quadrature:
/// int_0^inf exp(-u (1 + rho)) du, rho = sqrt(g) int_{1/sqrt(g)}^inf dt/(1+t^2).
double anchor_quadrature(double g)
{
    double const a = 1.0 / std::sqrt(g);
    auto tail = [&](double s) {
        double const t = a + s / (1.0 - s);
        return 1.0 / ((1.0 + t * t) * (1.0 - s) * (1.0 - s));
    };
    double const rho = std::sqrt(g) * oracle::gauss_legendre(tail, 0.0, 1.0, 400);
    return oracle::gauss_legendre([&](double u) { return std::exp(-u * (1.0 + rho)); }, 0.0, 80.0, 400);
}

Outcome c9()
{
    SmallCellScenario scn = small_cells(1.0);
    scn.prop.two_b = 4.0;
    scn.prop.p_noise_dbm = -std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::string detail;
    for (double g_db : {0.0, 5.0})
    {
        double const g = std::pow(10.0, g_db / 10.0);
        double const oracle_q = anchor_quadrature(g);
        double const closed = oracle::ppp_closed_form(g);
        double const model = ppp::coverage_ppp_dl(g_db, scn);
        worst = std::max(worst, std::abs(model - oracle_q));
        detail += fmt("%g dB: coverage_ppp_dl %.4f, oracle %.4f (closed form %.4f); ", g_db, model, oracle_q, closed);
    }
    return {worst <= 0.01, detail + fmt("max gap %.4f (<= 0.01)", worst)};
}

// ------------------------------------------------------------------ C10

Outcome c10()
{
    double const out1 = ppp::coverage_ppp_dl(-10.0, small_cells(1.0, 10.0, 130.0));
    double const out5 = ppp::coverage_ppp_dl(-10.0, small_cells(0.5, 10.0, 130.0));
    double const in1 = ppp::coverage_ppp_dl(-10.0, small_cells(1.0, 10.0, 160.0));
    double const in5 = ppp::coverage_ppp_dl(-10.0, small_cells(0.5, 10.0, 160.0));
    double const gain = 100.0 * (out5 - out1);
    double const gap = 100.0 * std::abs(in5 - in1);
    bool const ok = std::abs(gain - 15.0) <= 5.0 && gap < 3.0;
    return {ok, fmt("outdoor %.1f%% -> %.1f%%, gain %.1f pp (15 +- 5); indoor %.1f%% -> %.1f%%, gap %.1f pp (< 3)",
                    100.0 * out1, 100.0 * out5, gain, 100.0 * in1, 100.0 * in5, gap)};
}

// ------------------------------------------------------------------ C11

Outcome c11()
{
    std::vector<double> const lambdas{5.0, 10.0, 20.0, 30.0, 40.0, 50.0};
    bool dl_ok = true, ul_ok = true;
    double min_margin = std::numeric_limits<double>::infinity();
    double prev_ul = std::numeric_limits<double>::infinity();
    std::string ul_values;
    for (double l : lambdas)
    {
        double const s = ppp::ase(small_cells(1.0, l), Direction::dl);
        double const d = ppp::ase(small_cells(0.5, l), Direction::dl);
        min_margin = std::min(min_margin, d - s);
        dl_ok = dl_ok && d > s;
        double const u = ppp::ase(small_cells(0.5, l), Direction::ul);
        ul_ok = ul_ok && u < prev_ul;
        prev_ul = u;
        ul_values += fmt("%.4f ", u);
    }
    double worst_z = 0.0;
    for (auto dir : {Direction::dl, Direction::ul})
    {
        auto const scn = small_cells(0.5);
        double const a = ppp::ase(scn, dir);
        auto const m = ppp::mc_ase_ppp(scn, dir, 100000, kSeed);
        worst_z = std::max(worst_z, std::abs(a - m.value) / m.std_error);
    }
    bool const ok = dl_ok && ul_ok && worst_z <= 3.0;
    return {ok, fmt("DL D-TDD minus S-TDD min %.4f b/s/Hz (> 0); UL D-TDD over lambda 5..50: %s(decreasing: %s); "
                    "quadrature vs MC %.2f SE (<= 3)",
                    min_margin, ul_values.c_str(), ul_ok ? "yes" : "no", worst_z)};
}

// ------------------------------------------------------------------ C12

template <class T>
bool same_bytes(std::vector<T> const& a, std::vector<T> const& b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

bool same_bytes(CoverageCurve const& a, CoverageCurve const& b)
{
    return same_bytes(a.value, b.value) && same_bytes(a.ci_halfwidth, b.ci_halfwidth);
}

bool same_bytes(McEstimate const& a, McEstimate const& b)
{
    return std::memcmp(&a.value, &b.value, sizeof(double)) == 0 &&
           std::memcmp(&a.std_error, &b.std_error, sizeof(double)) == 0 && a.samples == b.samples;
}

std::vector<double> flatten(std::vector<hexgrid::MacroDraw> const& d)
{
    std::vector<double> out;
    for (auto const& x : d)
        out.insert(out.end(), {x.r, x.signal, x.i_same, x.i_cross, x.noise, x.sinr});
    return out;
}

std::vector<double> flatten(std::vector<ppp::PppDraw> const& d)
{
    std::vector<double> out;
    for (auto const& x : d)
        out.insert(out.end(), {x.r, x.signal, x.i_same, x.i_cross, x.i_far, x.noise, x.sinr});
    return out;
}

Outcome c12()
{
    std::vector<unsigned> const workers{1, 2, 3, 8};
    auto const grid = range(-20.0, 20.0, 5.0);
    auto const scn = small_cells(0.5);
    MacroNetwork const net = network(4);
    PropagationParams const prop = table1(3.5, 0.4);

    struct Entry
    {
        char const* name;
        std::function<bool(unsigned)> same_as_serial;
    };
    auto macro_opts = [](unsigned w) {
        hexgrid::MacroMcOptions o;
        o.workers = w;
        return o;
    };
    auto ppp_opts = [](unsigned w) {
        ppp::PppMcOptions o;
        o.workers = w;
        return o;
    };
    auto uldl_opts = [](unsigned w) {
        hexgrid::UlDlOptions o;
        o.workers = w;
        return o;
    };

    auto const draws_macro = flatten(hexgrid::mc_draws_macro(net, prop, mix(0.5), Direction::ul, 2000, kSeed, macro_opts(1)));
    auto const cov_macro = hexgrid::mc_coverage_macro(net, prop, mix(0.5), Direction::dl, grid, 2000, kSeed, macro_opts(1));
    auto const uldl = hexgrid::bruteforce_isr_ul_dl({0.3, 0.0}, network(10), prop, 5000, kSeed, uldl_opts(1));
    auto const draws_ppp = flatten(ppp::mc_draws_ppp(scn, Direction::dl, 2000, kSeed, ppp_opts(1)));
    auto const cov_ppp = ppp::mc_coverage_ppp(scn, Direction::ul, grid, 2000, kSeed, ppp_opts(1));
    auto const ase_ppp = ppp::mc_ase_ppp(scn, Direction::dl, 2000, kSeed, ppp_opts(1));
    auto const lap_ppp = ppp::mc_laplace_ppp(1e9, 0.1, scn, Direction::ul, 2000, kSeed, ppp_opts(1));

    std::vector<Entry> const entries{
        {"mc_draws_macro",
         [&](unsigned w) {
             return same_bytes(draws_macro,
                               flatten(hexgrid::mc_draws_macro(net, prop, mix(0.5), Direction::ul, 2000, kSeed, macro_opts(w))));
         }},
        {"mc_coverage_macro",
         [&](unsigned w) {
             return same_bytes(cov_macro, hexgrid::mc_coverage_macro(net, prop, mix(0.5), Direction::dl, grid, 2000,
                                                                     kSeed, macro_opts(w)));
         }},
        {"bruteforce_isr_ul_dl",
         [&](unsigned w) {
             return same_bytes(uldl, hexgrid::bruteforce_isr_ul_dl({0.3, 0.0}, network(10), prop, 5000, kSeed, uldl_opts(w)));
         }},
        {"mc_draws_ppp",
         [&](unsigned w) {
             return same_bytes(draws_ppp, flatten(ppp::mc_draws_ppp(scn, Direction::dl, 2000, kSeed, ppp_opts(w))));
         }},
        {"mc_coverage_ppp",
         [&](unsigned w) {
             return same_bytes(cov_ppp, ppp::mc_coverage_ppp(scn, Direction::ul, grid, 2000, kSeed, ppp_opts(w)));
         }},
        {"mc_ase_ppp",
         [&](unsigned w) { return same_bytes(ase_ppp, ppp::mc_ase_ppp(scn, Direction::dl, 2000, kSeed, ppp_opts(w))); }},
        {"mc_laplace_ppp",
         [&](unsigned w) {
             return same_bytes(lap_ppp, ppp::mc_laplace_ppp(1e9, 0.1, scn, Direction::ul, 2000, kSeed, ppp_opts(w)));
         }},
    };

    bool ok = true;
    std::string failed;
    for (auto const& e : entries)
        for (unsigned w : workers)
            if (!e.same_as_serial(w))
            {
                ok = false;
                failed += fmt("%s@%u ", e.name, w);
            }
    return {ok, ok ? fmt("%zu entry points byte-identical for workers {1, 2, 3, 8}", entries.size())
                   : "differs: " + failed};
}

struct Criterion
{
    int id;
    char const* title;
    Outcome (*run)();
    /// Wall-clock budget in seconds; 0 means none.
    double budget = 0.0;
};

Criterion const kCriteria[] = {
    {1, "lattice sum vs omega", c1, 5.0},
    {2, "beta_0 / A1 identity", c2, 1.0},
    {3, "UL-to-DL series vs MC", c3, 30.0},
    {4, "inverse round trips", c4},
    {5, "macro coverage analytic vs MC", c5, 120.0},
    {6, "macro UL D-TDD degradation", c6},
    {7, "macro power-control trends", c7},
    {8, "PPP coverage analytic vs MC", c8, 300.0},
    {9, "PPP closed-form anchor", c9},
    {10, "small-cell DL D-TDD gain", c10},
    {11, "ASE trends and MC agreement", c11},
    {12, "MC determinism across workers", c12},
};

}  // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
    {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else
        {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > 12)
    {
        std::fprintf(stderr, "criterion must be 1..12\n");
        return 2;
    }

    bool all_ok = true;
    for (auto const& c : kCriteria)
    {
        if (only != 0 && c.id != only)
            continue;
        auto const start = std::chrono::steady_clock::now();
        Outcome out;
        try
        {
            out = c.run();
        }
        catch (std::exception const& e)
        {
            out = {false, std::string("error: ") + e.what()};
        }
        double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0.0)
        {
            out.detail += fmt("; runtime budget %.0fs", c.budget);
            if (secs > c.budget)
            {
                out.passed = false;
                out.detail += " exceeded";
            }
        }
        std::printf("C%02d %s  %-32s %7.2fs  %s\n", c.id, out.passed ? "PASS" : "FAIL", c.title, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && out.passed;
    }
    return all_ok ? 0 : 1;
}
