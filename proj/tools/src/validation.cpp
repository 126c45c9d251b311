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

#include "tddgeom_app/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <utility>

#include "tddgeom/coverage.hpp"
#include "tddgeom/errors.hpp"
#include "tddgeom/hexgrid.hpp"
#include "tddgeom/macro_analytic.hpp"
#include "tddgeom/model.hpp"
#include "tddgeom/parallel.hpp"
#include "tddgeom/ppp_analytic.hpp"
#include "tddgeom/ppp_model.hpp"
#include "tddgeom/quadrature.hpp"
#include "tddgeom/rng.hpp"
#include "tddgeom/specfun.hpp"

namespace tddgeom::app {
namespace {

constexpr double kPi = std::numbers::pi;

struct Check
{
    std::string name;
    std::function<CheckResult(ValidateOptions const&)> run;
};

CheckResult bound(double achieved, double required, std::string metric, std::string detail = {})
{
    CheckResult r;
    r.achieved = achieved;
    r.required = required;
    r.metric = std::move(metric);
    r.passed = std::isfinite(achieved) && achieved <= required;
    r.detail = std::move(detail);
    return r;
}

double rel_err(double value, double reference)
{
    return std::abs(value - reference) / std::abs(reference);
}

std::string fmt(char const* format, double a, double b = 0.0, double c = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

/// Sum_{n>=0} (n+q)^{-s} by direct summation of N terms and an
/// Euler-Maclaurin tail (integral, half term, first derivative term).
double dirichlet_sum(double s, double q, int n_terms)
{
    double sum = 0.0;
    for (int n = n_terms - 1; n >= 0; --n)
        sum += std::pow(n + q, -s);
    double const a = n_terms + q;
    return sum + std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s) +
           s * std::pow(a, -s - 1.0) / 12.0;
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

SmallCellScenario small_cells(double alpha_d)
{
    SmallCellScenario s;
    s.mix.alpha_d = alpha_d;
    return s;
}

// ---------------------------------------------------------------- specfun

CheckResult zeta_direct(ValidateOptions const&)
{
    double const ref = dirichlet_sum(3.5, 1.0, 2000);
    double const got = specfun::riemann_zeta(3.5);
    return bound(rel_err(got, ref), 1e-10, "relative", fmt("zeta(3.5) = %.15g, direct %.15g", got, ref));
}

CheckResult hurwitz_direct(ValidateOptions const&)
{
    double const q = 1.0 / 3.0;
    double const ref = dirichlet_sum(3.5, q, 2000);
    double const got = specfun::hurwitz_zeta(3.5, q);
    return bound(rel_err(got, ref), 1e-10, "relative", fmt("zeta(3.5,1/3) = %.15g, direct %.15g", got, ref));
}

CheckResult omega_lattice(double z, double tol, int rings)
{
    MacroNetwork net = network(rings);
    double const ref = hexgrid::lattice_sum(2.0 * z, net) / 6.0;
    double const got = specfun::omega(z);
    return bound(rel_err(got, ref), tol, "relative",
                 fmt("omega = %.12g, lattice/6 = %.12g (%g rings)", got, ref, rings));
}

CheckResult shadowing_mc(ValidateOptions const& o)
{
    std::size_t const n = o.quick ? 100000 : 1000000;
    double const sigma = 8.0;
    std::vector<double> samples(n);
    parallel_for(n, o.workers, [&](std::size_t i) {
        StreamRng rng(o.seed, i);
        double const u1 = rng.uniform();
        double const u2 = rng.uniform();
        double const g = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
        samples[i] = std::pow(10.0, sigma * g / 10.0);
    });
    auto const est = mean_estimate(samples);
    double const got = specfun::shadowing_mean_factor(specfun::ShadowingSpec{sigma});
    return bound(std::abs(got - est.value) / est.std_error, 3.0, "standard errors",
                 fmt("factor %.6g, MC %.6g +- %.2g", got, est.value, est.std_error));
}

// ---------------------------------------------------------- macro series

CheckResult dl_dl_lattice(ValidateOptions const& o)
{
    int const rings = o.quick ? 150 : 500;
    MacroNetwork const net = network(rings);
    PropagationParams const prop = table1(3.5, 0.0);
    double const x = 0.3;
    double const ref = hexgrid::bruteforce_isr_dl_theta_average(x * net.delta, net, prop);
    double const got = macro::isr_dl_dl(x, 1.75);
    return bound(rel_err(got, ref), 1e-5, "relative",
                 fmt("series %.10g, lattice %.10g (%g rings, theta-averaged)", got, ref, rings));
}

CheckResult dl_dl_dominance(ValidateOptions const&)
{
    double const x = 0.05;
    double const b = 1.75;
    double const first = 6.0 * specfun::omega(b) * std::pow(x, 2.0 * b);
    double const full = macro::isr_dl_dl(x, b);
    return bound(rel_err(full, first), 0.01, "relative", fmt("full %.8g, first term %.8g", full, first));
}

CheckResult a1_identity(ValidateOptions const& o)
{
    double worst = 0.0;
    for (double b : {1.25, 1.75, 2.25})
        for (double k : {0.0, 0.4, 1.0})
            for (double q : {0.3, 1.0 / std::sqrt(3.0)})
            {
                double beta0 = macro::beta_h(0, b, k, q);
                if (o.fault == Fault::beta_sign)
                    beta0 = -beta0;
                double const lhs = 6.0 * std::pow(q, 2.0 * b * k) * beta0;
                worst = std::max(worst, rel_err(lhs, macro::a1(b, k, q)));
            }
    return bound(worst, 1e-10, "relative", "6 (R/delta)^{2bk} beta_0 vs A1 on a 3x3x2 grid");
}

CheckResult ul_dl_mc(ValidateOptions const& o)
{
    std::size_t const n = o.quick ? 100000 : 1000000;
    MacroNetwork const net = network(30);
    PropagationParams const prop = table1(3.5, 0.4);
    double const x = 0.4;
    hexgrid::UlDlOptions uo;
    uo.workers = o.workers;
    auto const est = hexgrid::bruteforce_isr_ul_dl(MobilePolar{x * net.delta, 0.0}, net, prop, n, o.seed, uo);
    double const got = macro::isr_ul_dl(x, 1.75, 0.4, net.r_over_delta(), prop.p_star_eff() / prop.p_eff(), net.delta);
    return bound(std::abs(got - est.value) / est.std_error, 3.0, "standard errors",
                 fmt("series %.8g, MC %.8g +- %.2g", got, est.value, est.std_error));
}

/// A1 = sum_s E[rho^{2bk} |s + rho e^{i phi}|^{-2b}] for rho uniform in
/// the disk of radius q (delta = 1): quadrature over (rho, phi) for the
/// sites of the first rings, two-term far-field expansion beyond.
CheckResult a1_quadrature(ValidateOptions const& o)
{
    double const b = 1.75, k = 0.4, q = 1.0 / std::sqrt(3.0);
    int const near = o.quick ? 6 : 12;
    MacroNetwork const inner = network(near);
    auto const sites = hexgrid::lattice_points(inner);
    double near_sum = 0.0;
    double near_lead = 0.0;
    double near_next = 0.0;
    for (auto const& s : sites)
    {
        // rho density 2 rho / q^2 on [0, q]; phi uniform.
        auto over_rho = [&](double rho) {
            auto over_phi = [&](double phi) {
                double const dx = s.real() + rho * std::cos(phi);
                double const dy = s.imag() + rho * std::sin(phi);
                return std::pow(dx * dx + dy * dy, -b);
            };
            double const mean_phi =
                integrate(over_phi, 0.0, 2.0 * kPi, 1e-13, 200, "A1 oracle angle").value / (2.0 * kPi);
            return std::pow(rho, 2.0 * b * k) * mean_phi * 2.0 * rho / (q * q);
        };
        near_sum += integrate(over_rho, 0.0, q, 1e-13, 200, "A1 oracle radius").value;
        double const d2 = std::norm(s);
        near_lead += std::pow(d2, -b);
        near_next += std::pow(d2, -b - 1.0);
    }
    // E[rho^{2m}] = q^{2m}/(m+1) for the uniform disk.
    auto moment = [&](double m) { return std::pow(q, 2.0 * m) / (m + 1.0); };
    MacroNetwork const full = network(500);
    double const lead = hexgrid::lattice_sum(2.0 * b, full) - near_lead;
    double const next = hexgrid::lattice_sum(2.0 * b + 2.0, full) - near_next;
    double const ref = near_sum + moment(b * k) * lead + b * b * moment(b * k + 1.0) * next;
    double const got = macro::a1(b, k, q);
    return bound(rel_err(got, ref), 1e-4, "relative", fmt("A1 %.10g, quadrature %.10g", got, ref));
}

CheckResult a2_lattice(ValidateOptions const& o)
{
    int const rings = o.quick ? 150 : 500;
    MacroNetwork const net = network(rings);
    PropagationParams const prop = table1(3.5, 0.4);
    TddMix mix;
    macro::MacroModel const model(net, prop, mix);
    double const x = 0.3;
    double const r = x * net.delta;
    double const ref = prop.p_eff() / prop.p_star_eff() * hexgrid::lattice_sum(3.5, net) *
                       std::pow(r, 3.5 * (1.0 - 0.4));
    double const got = model.dl_to_ul(x);
    return bound(rel_err(got, ref), 1e-5, "relative", fmt("A2 x^{2b(1-k)} %.10g, lattice %.10g", got, ref));
}

CheckResult sinr_dl_mc(ValidateOptions const& o)
{
    std::size_t const n = o.quick ? 100000 : 1000000;
    MacroNetwork const net = network(30);
    PropagationParams const prop = table1(3.5, 0.0);
    TddMix mix;
    mix.alpha_d = 0.5;
    double const x = 0.4;
    double const r = x * net.delta;
    double const dl = hexgrid::bruteforce_isr_dl_theta_average(r, net, prop);
    hexgrid::UlDlOptions uo;
    uo.workers = o.workers;
    auto const ul = hexgrid::bruteforce_isr_ul_dl(MobilePolar{r, 0.0}, net, prop, n, o.seed, uo);
    double const p_mw = std::pow(10.0, (60.0 + 16.0 - 130.0) / 10.0);
    double const noise_mw = std::pow(10.0, -93.0 / 10.0);
    double const y0 = noise_mw * std::pow(net.delta, 3.5) / p_mw;
    double const denom = net.load_eta * (mix.alpha_d * dl + mix.alpha_u() * ul.value) + y0 * std::pow(x, 3.5);
    double const ref = 1.0 / denom;
    double const ref_se = ref * net.load_eta * mix.alpha_u() * ul.std_error / denom;
    macro::MacroModel const model(net, prop, mix);
    double const got = model.sinr_dl(x);
    return bound(std::abs(got - ref) / ref_se, 3.0, "standard errors",
                 fmt("SINR_DL %.8g, MC construction %.8g +- %.2g", got, ref, ref_se));
}

CheckResult inverse_series(double x_top, double tol)
{
    MacroNetwork const net = network(4);
    PropagationParams const prop = table1(3.5, 0.0);
    double worst = 0.0;
    for (double alpha_d : {1.0, 0.5})
    {
        TddMix mix;
        mix.alpha_d = alpha_d;
        macro::MacroModel const model(net, prop, mix);
        for (double x = 0.025; x <= x_top + 1e-12; x += 0.025)
        {
            double const y = model.d(x);
            double const xb = model.inv_d(y, macro::InverseMethod::bisection);
            double const xs = model.inv_d(y, macro::InverseMethod::series);
            worst = std::max(worst, rel_err(xs, xb));
        }
    }
    return bound(worst, tol, "relative", fmt("series vs bisection inverse of d, x in (0, %g]", x_top));
}

CheckResult macro_coverage_mc(ValidateOptions const& o,
                              double alpha_d,
                              hexgrid::InterfererModel interferers,
                              bool informational)
{
    std::size_t const n = o.quick ? 5000 : 20000;
    MacroNetwork const net = network(30);
    PropagationParams const prop = table1(3.5, 0.0);
    TddMix mix;
    mix.alpha_d = alpha_d;
    std::vector<double> grid;
    for (double g = -20.0; g <= 30.0; g += 2.0)
        grid.push_back(g);
    macro::MacroModel const model(net, prop, mix);
    auto const a = model.coverage_curve(grid, Direction::dl);
    hexgrid::MacroMcOptions mo;
    mo.workers = o.workers;
    mo.interferers = interferers;
    auto const m = hexgrid::mc_coverage_macro(net, prop, mix, Direction::dl, grid, n, o.seed, mo);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        sup = std::max(sup, std::abs(a.value[i] - m.value[i]));
    bool const mean_field = interferers == hexgrid::InterfererModel::mean_field;
    auto r = bound(sup, 0.03, "sup-norm",
                   fmt("alpha_d = %g DL, 30 rings, ", alpha_d) +
                       (mean_field ? "mean-field interferers" : "Bernoulli interferers") +
                       (informational ? " (gap of the mean-ISR approximation)" : ""));
    r.informational = informational;
    return r;
}

// ----------------------------------------------------------------- PPP

CheckResult ppp_radial_ks(ValidateOptions const& o)
{
    std::size_t const target = o.quick ? 20000 : 100000;
    double const lambda = 10.0, w = 3.0;
    std::vector<double> cdf;
    for (std::uint64_t seed = 0; cdf.size() < target; ++seed)
        for (auto const& p : ppp::sample_ppp(lambda, w, o.seed + seed))
            cdf.push_back(std::norm(p) / (w * w));
    std::sort(cdf.begin(), cdf.end());
    double d = 0.0;
    double const n = static_cast<double>(cdf.size());
    for (std::size_t i = 0; i < cdf.size(); ++i)
        d = std::max({d, std::abs((i + 1) / n - cdf[i]), std::abs(cdf[i] - i / n)});
    return bound(d, 1.628 / std::sqrt(n), "KS statistic", fmt("%g pooled points", n));
}

CheckResult displacement_poisson(ValidateOptions const& o)
{
    std::size_t const n = o.quick ? 400 : 2000;
    double const lambda = 10.0;
    std::vector<double> counts(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        auto const users = ppp::sample_ppp(lambda, 3.0, o.seed + 7919 * i);
        auto const cells = ppp::displace_cells(users, lambda, o.seed + 7919 * i);
        counts[i] = static_cast<double>(
            std::count_if(cells.begin(), cells.end(), [](auto const& c) { return std::abs(c) < 1.0; }));
    }
    auto const est = mean_estimate(counts);
    double var = 0.0;
    for (double c : counts)
        var += (c - est.value) * (c - est.value);
    var /= static_cast<double>(n - 1);
    double const dispersion = var / est.value;
    double const se = std::sqrt(2.0 / static_cast<double>(n - 1));
    return bound(std::abs(dispersion - 1.0) / se, 3.0, "standard errors",
                 fmt("variance/mean %.4g, mean %.4g (expected %.4g)", dispersion, est.value, lambda * kPi));
}

CheckResult laplace_mc(ValidateOptions const& o, Direction dir)
{
    std::size_t const n = o.quick ? 20000 : 100000;
    SmallCellScenario const scn = small_cells(0.5);
    ppp::PppMcOptions mo;
    mo.workers = o.workers;
    double worst = 0.0;
    std::string detail;
    double const ex = dir == Direction::dl ? scn.prop.two_b : scn.prop.two_b * (1.0 - scn.prop.k);
    double const power = dir == Direction::dl ? scn.p_eff() : scn.p_star_eff();
    std::pair<double, double> const grid[] = {{1.0, 0.1}, {1.0, 0.2}, {0.3, 0.35}};
    for (auto const& [gamma, r] : grid)
    {
        double const v = gamma * std::pow(r, ex) / power;
        double const got = dir == Direction::dl ? ppp::laplace_dl(v, r, scn) : ppp::laplace_ul(v, r, scn);
        auto const est = ppp::mc_laplace_ppp(v, r, scn, dir, n, o.seed, mo);
        double const z = std::abs(got - est.value) / est.std_error;
        if (z >= worst)
        {
            worst = z;
            detail = fmt("worst at r = %g: analytic %.6g, MC %.6g", r, got, est.value);
        }
    }
    return bound(worst, 3.0, "standard errors", detail);
}

CheckResult ppp_coverage_mc(ValidateOptions const& o, Direction dir, double k)
{
    std::size_t const n = o.quick ? 20000 : 100000;
    SmallCellScenario scn = small_cells(0.5);
    scn.prop.k = k;
    std::vector<double> grid;
    for (double g = -20.0; g <= 20.0; g += 5.0)
        grid.push_back(g);
    auto const a = ppp::coverage_curve_ppp(grid, dir, scn);
    ppp::PppMcOptions mo;
    mo.workers = o.workers;
    auto const m = ppp::mc_coverage_ppp(scn, dir, grid, n, o.seed, mo);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        sup = std::max(sup, std::abs(a.value[i] - m.value[i]));
    return bound(sup, 0.05, "sup-norm", fmt("alpha_d = 0.5, k = %g", k));
}

/// Interference-limited Rayleigh PPP with nearest association, 2b = 4:
/// P = int_0^inf exp(-u (1 + rho(gamma))) du with
/// rho = sqrt(gamma) int_{1/sqrt(gamma)}^inf dt/(1+t^2), both by quadrature.
double closed_form_anchor(double gamma)
{
    double const a = 1.0 / std::sqrt(gamma);
    auto mapped = [&](double s) {
        double const t = a + s / (1.0 - s);
        return 1.0 / ((1.0 + t * t) * (1.0 - s) * (1.0 - s));
    };
    double const rho = std::sqrt(gamma) * integrate(mapped, 0.0, 1.0, 1e-14, 200, "anchor tail").value;
    return integrate([&](double u) { return std::exp(-u * (1.0 + rho)); }, 0.0, 60.0, 1e-14, 200,
                     "anchor radius")
        .value;
}

SmallCellScenario anchor_scenario(Association assoc)
{
    SmallCellScenario s = small_cells(1.0);
    s.prop.two_b = 4.0;
    s.prop.p_noise_dbm = -std::numeric_limits<double>::infinity();
    s.association = assoc;
    return s;
}

CheckResult anchor_nearest_mc(ValidateOptions const& o)
{
    std::size_t const n = o.quick ? 20000 : 100000;
    SmallCellScenario const scn = anchor_scenario(Association::nearest);
    ppp::PppMcOptions mo;
    mo.workers = o.workers;
    auto const m = ppp::mc_coverage_ppp(scn, Direction::dl, {0.0, 5.0}, n, o.seed, mo);
    double const e0 = std::abs(m.value[0] - closed_form_anchor(1.0));
    double const e5 = std::abs(m.value[1] - closed_form_anchor(std::pow(10.0, 0.5)));
    return bound(std::max(e0, e5), 0.01, "absolute",
                 fmt("nearest-BS MC %.4f / %.4f at 0 / 5 dB", m.value[0], m.value[1]));
}

CheckResult anchor_displaced_model(ValidateOptions const&)
{
    SmallCellScenario const scn = anchor_scenario(Association::displaced);
    double const a0 = ppp::coverage_ppp_dl(0.0, scn);
    double const a5 = ppp::coverage_ppp_dl(5.0, scn);
    double const e0 = std::abs(a0 - closed_form_anchor(1.0));
    double const e5 = std::abs(a5 - closed_form_anchor(std::pow(10.0, 0.5)));
    auto r = bound(std::max(e0, e5), 0.01, "absolute",
                   fmt("displaced-cell model %.4f / %.4f at 0 / 5 dB (gap of the displacement approximation)", a0, a5));
    r.informational = true;
    return r;
}

CheckResult ase_mc(ValidateOptions const& o, Direction dir)
{
    std::size_t const n = o.quick ? 20000 : 100000;
    SmallCellScenario const scn = small_cells(0.5);
    ppp::PppMcOptions mo;
    mo.workers = o.workers;
    double const got = ppp::ase(scn, dir);
    auto const est = ppp::mc_ase_ppp(scn, dir, n, o.seed, mo);
    return bound(std::abs(got - est.value) / est.std_error, 3.0, "standard errors",
                 fmt("ASE %.5g, MC %.5g +- %.2g", got, est.value, est.std_error));
}

CheckResult laplace_methods(ValidateOptions const&)
{
    SmallCellScenario const scn = small_cells(0.5);
    ppp::AnalyticOptions nested;
    nested.method = ppp::LaplaceMethod::nested;
    double worst = 0.0;
    for (auto dir : {Direction::dl, Direction::ul})
    {
        double const r = 0.2;
        double const ex = dir == Direction::dl ? scn.prop.two_b : scn.prop.two_b * (1.0 - scn.prop.k);
        double const v = std::pow(r, ex) / (dir == Direction::dl ? scn.p_eff() : scn.p_star_eff());
        double const a = dir == Direction::dl ? ppp::laplace_dl(v, r, scn) : ppp::laplace_ul(v, r, scn);
        double const b = dir == Direction::dl ? ppp::laplace_dl(v, r, scn, nested)
                                              : ppp::laplace_ul(v, r, scn, nested);
        worst = std::max(worst, std::abs(a - b));
    }
    return bound(worst, 1e-5, "absolute", "reduced vs literal triple integral, DL and UL");
}

std::vector<Check> suite()
{
    return {
        {"specfun.riemann_zeta(3.5) vs direct sum", zeta_direct},
        {"specfun.hurwitz_zeta(3.5,1/3) vs direct sum", hurwitz_direct},
        {"specfun.omega(1.75) vs lattice sum", [](auto const& o) { return omega_lattice(1.75, 1e-6, o.quick ? 200 : 500); }},
        {"specfun.omega(1.25) vs lattice sum", [](auto const& o) { return omega_lattice(1.25, 1e-3, o.quick ? 200 : 500); }},
        {"specfun.shadowing_mean_factor(8 dB) vs MC", shadowing_mc},
        {"macro.isr_dl_dl(0.3) vs lattice sum", dl_dl_lattice},
        {"macro.isr_dl_dl(0.05) first-term dominance", dl_dl_dominance},
        {"macro.beta_0 / A1 identity", a1_identity},
        {"macro.isr_ul_dl(0.4) vs MC", ul_dl_mc},
        {"macro.a1 vs quadrature", a1_quadrature},
        {"macro.a2 vs lattice sum", a2_lattice},
        {"macro.sinr_dl(0.4) vs MC construction", sinr_dl_mc},
        {"macro.inv_d series vs bisection, x <= 0.4", [](auto const&) { return inverse_series(0.4, 0.02); }},
        {"macro.inv_d series vs bisection, x <= 0.5", [](auto const&) { return inverse_series(0.5, 0.05); }},
        {"macro.coverage vs MC", [](auto const& o) { return macro_coverage_mc(o, 1.0, hexgrid::InterfererModel::bernoulli, false); }},
        {"macro.coverage(alpha_d=0.5) vs mean-field MC", [](auto const& o) { return macro_coverage_mc(o, 0.5, hexgrid::InterfererModel::mean_field, false); }},
        {"macro.coverage(alpha_d=0.5) vs Bernoulli MC", [](auto const& o) { return macro_coverage_mc(o, 0.5, hexgrid::InterfererModel::bernoulli, true); }},
        {"ppp.sample_ppp radial KS", ppp_radial_ks},
        {"ppp.displace_cells Poisson counts", displacement_poisson},
        {"ppp.laplace_dl vs MC", [](auto const& o) { return laplace_mc(o, Direction::dl); }},
        {"ppp.laplace_ul vs MC", [](auto const& o) { return laplace_mc(o, Direction::ul); }},
        {"ppp.laplace reduced vs nested", laplace_methods},
        {"ppp.coverage_dl vs MC", [](auto const& o) { return ppp_coverage_mc(o, Direction::dl, 0.4); }},
        {"ppp.coverage_ul vs MC", [](auto const& o) { return ppp_coverage_mc(o, Direction::ul, 0.4); }},
        {"ppp.coverage_ul(k=1) vs MC", [](auto const& o) { return ppp_coverage_mc(o, Direction::ul, 1.0); }},
        {"ppp.mc nearest-BS vs closed form", anchor_nearest_mc},
        {"ppp.coverage_dl displaced model vs closed form", anchor_displaced_model},
        {"ppp.ase_dl vs MC", [](auto const& o) { return ase_mc(o, Direction::dl); }},
        {"ppp.ase_ul vs MC", [](auto const& o) { return ase_mc(o, Direction::ul); }},
    };
}

}  // namespace

std::vector<CheckResult> run_validation(ValidateOptions const& opts,
                                        std::function<void(CheckResult const&)> const& on_result)
{
    std::vector<CheckResult> results;
    for (auto const& check : suite())
    {
        if (!opts.filter.empty() && check.name.find(opts.filter) == std::string::npos)
            continue;
        auto const start = std::chrono::steady_clock::now();
        CheckResult r;
        try
        {
            r = check.run(opts);
        }
        catch (std::exception const& e)
        {
            r = CheckResult{};
            r.achieved = std::numeric_limits<double>::quiet_NaN();
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.name = check.name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(std::vector<CheckResult> const& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](CheckResult const& r) { return r.passed || r.informational; });
}

std::string format_check(CheckResult const& r)
{
    char buf[512];
    char const* status = r.passed ? "PASS" : (r.informational ? "INFO" : "FAIL");
    std::snprintf(buf, sizeof buf, "[%s] %-48s achieved %-10.3g required <= %-8.3g (%s) %6.2fs  %s", status,
                  r.name.c_str(), r.achieved, r.required, r.metric.c_str(), r.seconds, r.detail.c_str());
    return buf;
}

}  // namespace tddgeom::app
