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

#include "tddgeom/ppp_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>


#include "tddgeom/errors.hpp"
#include "tddgeom/units.hpp"

namespace tddgeom::ppp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// exp(-u) below 1e-12: truncation of the displacement integral.
constexpr double kDisplacementUMax = 27.631021115928547;
// exp(-u) below 1e-8: truncation of the serving-distance integral.
constexpr double kServingUMax = 18.420680743952367;

using Fn = std::function<double(double)>;

struct Ctx
{
    double lambda;
    double b;
    double bk;
    double ell;  // 1/sqrt(pi lambda)
    double tol;  // tolerance of each inner integral
    std::size_t max_intervals;
};

Ctx make_ctx(SmallCellScenario const& scn, QuadratureControl const& quad)
{
    scn.validate();
    quad.validate();
    return {scn.lambda,
            scn.prop.b(),
            scn.prop.b() * scn.prop.k,
            1.0 / std::sqrt(kPi * scn.lambda),
            quad.inner_abs_tol,
            quad.max_intervals};
}

double rho_of(Ctx const& c, double u)
{
    return c.ell * std::sqrt(u);
}

double rho_fpc(Ctx const& c, double rho)
{
    return c.bk == 0.0 ? 1.0 : std::exp(2.0 * c.bk * std::log(rho));
}

// w/(1+w) with w = coeff * t^{-2b}
double saturation(double coeff, double t, double b)
{
    if (coeff == 0.0)
        return 0.0;
    double const tb = std::exp(2.0 * b * std::log(t));
    return coeff / (coeff + tb);
}

// int_0^w s^{q-1}/(1+s) ds = w^q/(q(1+w)) 2F1(1,1;q+1;w/(1+w)), for w <= 1.
double power_over_one_plus(double q, double w)
{
    double const x = w / (1.0 + w);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < 200 && term > 1e-17 * sum; ++n)
    {
        term *= x * (n + 1.0) / (n + 1.0 + q);
        sum += term;
    }
    return std::pow(w, q) / (q * (1.0 + w)) * sum;
}

// Closed form of int_a^inf 2 pi t c / (c + t^{2b}) dt: with y = t^{2b}/c it
// is (pi c^{1/b}/b) int_{a^{2b}/c}^inf y^{1/b-1}/(1+y) dy.
double saturation_integral(double c, double a, double b)
{
    if (c == 0.0)
        return 0.0;
    double const p = 1.0 / b;
    double const scale = kPi * std::pow(c, p) / b;
    double const whole = kPi / std::sin(kPi * p);
    if (a == 0.0)
        return scale * whole;
    double const y = std::exp(2.0 * b * std::log(a) - std::log(c));
    if (y <= 1.0)
        return scale * (whole - power_over_one_plus(p, y));
    return scale * power_over_one_plus(1.0 - p, 1.0 / y);
}

// Integral over [a, inf) through t = a + ell s/(1-s).
double integrate_to_infinity(Ctx const& c, Fn const& f, double a, std::string const& what)
{
    auto mapped = [&](double s) {
        double const one_minus = 1.0 - s;
        double const t = a + c.ell * s / one_minus;
        return f(t) * c.ell / (one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, c.tol, c.max_intervals, what).value;
}

// Fraction of phi in [0, 2pi) with |t + rho e^{i phi}| >= r.
double outside_fraction(double t, double rho, double r)
{
    if (r == 0.0 || std::abs(t - rho) >= r)
        return 1.0;
    if (t + rho <= r)
        return 0.0;
    double const cos_min = (r * r - t * t - rho * rho) / (2.0 * t * rho);
    return std::acos(std::clamp(cos_min, -1.0, 1.0)) / kPi;
}

// Integral over [lo, hi] through t = lo + (hi - lo)(1 - cos psi)/2, which
// smooths square-root behaviour at both ends.
double integrate_cos_map(Ctx const& c, Fn const& f, double lo, double hi, std::string const& what)
{
    double const half = 0.5 * (hi - lo);
    auto mapped = [&](double psi) { return f(lo + half * (1.0 - std::cos(psi))) * half * std::sin(psi); };
    return integrate(mapped, 0.0, kPi, c.tol, c.max_intervals, what).value;
}

// Mean over the displacement law of f(u), u = lambda pi rho^2 ~ Exp(1),
// computed as int_0^1 f(-ln(1 - w)) dw and split where rho crosses r.
double integrate_displacement(Ctx const& c, Fn const& f, double r)
{
    double const w_max = -std::expm1(-kDisplacementUMax);
    auto mapped = [&](double w) { return f(-std::log1p(-w)); };
    double const w_r = std::min(-std::expm1(-c.lambda * kPi * r * r), w_max);
    double sum = 0.0;
    if (w_r > 0.0)
        sum += integrate(mapped, 0.0, w_r, c.tol, c.max_intervals, "displacement").value;
    if (w_r < w_max)
        sum += integrate(mapped, w_r, w_max, c.tol, c.max_intervals, "displacement").value;
    return sum;
}

// Exponent contribution of transmitters displaced by rho from PPP points
// outside radius r, with received power coeff * [rho^{2bk}] |y|^{-2b}.
double displaced_exponent(Ctx const& c, double coeff, bool fpc_weight, double r)
{
    if (coeff == 0.0)
        return 0.0;
    auto over_u = [&](double u) {
        double const rho = rho_of(c, u);
        double const cw = coeff * (fpc_weight ? rho_fpc(c, rho) : 1.0);
        auto partial = [&](double t) {
            return kTwoPi * t * saturation(cw, t, c.b) * outside_fraction(t, rho, r);
        };
        double const lo = std::abs(r - rho);
        double const hi = r + rho;
        // Beyond r + rho every displaced point came from outside r; below
        // |r - rho| either all (rho > r) or none did.
        double sum = saturation_integral(cw, hi, c.b);
        if (rho > r)
            sum += saturation_integral(cw, 0.0, c.b) - saturation_integral(cw, lo, c.b);
        if (hi > lo)
            sum += integrate_cos_map(c, partial, lo, hi, "displaced edge");
        return sum;
    };
    return c.lambda * integrate_displacement(c, over_u, r);
}

// Exponent contribution of transmitters at PPP points beyond r, received
// power coeff * [rho^{2bk}] x^{-2b}.
double radial_exponent(Ctx const& c, double coeff, bool fpc_weight, double r)
{
    if (coeff == 0.0)
        return 0.0;
    auto radial = [&](double cw) { return saturation_integral(cw, r, c.b); };
    if (!fpc_weight || c.bk == 0.0)
        return c.lambda * radial(coeff);
    auto over_u = [&](double u) { return radial(coeff * rho_fpc(c, rho_of(c, u))); };
    return c.lambda * integrate_displacement(c, over_u, 0.0);
}

// Literal form: lambda * int_r^inf x K(x) dx with the angle and
// displacement integrated numerically.
double nested_exponent(Ctx const& c,
                       double same_coeff,
                       double cross_coeff,
                       double alpha_same,
                       Direction direction,
                       double r)
{
    double const alpha_cross = 1.0 - alpha_same;
    // DL: cells at |x + rho e^{i theta}|; UL: mobiles at |x - rho e^{i theta}|.
    double const sign = direction == Direction::dl ? 1.0 : -1.0;
    bool const same_fpc = direction == Direction::ul;
    bool const cross_fpc = direction == Direction::dl;

    auto kernel = [&](double x) {
        double k = 0.0;
        if (alpha_same > 0.0)
        {
            auto over_theta = [&](double theta) {
                auto over_u = [&](double u) {
                    double const rho = rho_of(c, u);
                    double const d2 =
                        x * x + rho * rho + sign * 2.0 * x * rho * std::cos(theta);
                    double const cw = same_coeff * (same_fpc ? rho_fpc(c, rho) : 1.0);
                    return std::exp(-u) * saturation(cw, std::sqrt(d2), c.b);
                };
                return integrate(over_u, 0.0, kDisplacementUMax, c.tol, c.max_intervals,
                                 "nested displacement")
                    .value;
            };
            k += alpha_same * 2.0 *
                 integrate(over_theta, 0.0, kPi, c.tol, c.max_intervals, "nested angle").value;
        }
        if (alpha_cross > 0.0)
        {
            double mean;
            if (cross_fpc && c.bk != 0.0)
            {
                auto over_u = [&](double u) {
                    return std::exp(-u) *
                           saturation(cross_coeff * rho_fpc(c, rho_of(c, u)), x, c.b);
                };
                mean = integrate(over_u, 0.0, kDisplacementUMax, c.tol, c.max_intervals,
                                 "nested displacement")
                           .value;
            }
            else
            {
                mean = saturation(cross_coeff, x, c.b);
            }
            k += alpha_cross * kTwoPi * mean;
        }
        return x * k;
    };
    return c.lambda * integrate_to_infinity(c, kernel, r, "nested radial");
}

double laplace(double v,
               double r,
               Direction direction,
               SmallCellScenario const& scn,
               AnalyticOptions const& opts)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw DomainError("laplace: requires finite v >= 0");
    if (!(r >= 0.0))
        throw DomainError("laplace: requires r >= 0");
    Ctx const c = make_ctx(scn, opts.quad);
    if (v == 0.0)
        return 1.0;

    double const p = scn.p_eff();
    double const p_star = scn.p_star_eff();
    double const alpha_d = scn.mix.alpha_d;
    double const alpha_u = scn.mix.alpha_u();
    bool const dl = direction == Direction::dl;
    double const same_coeff = v * (dl ? p : p_star);
    double const cross_coeff = v * (dl ? p_star : p);
    double const alpha_same = dl ? alpha_d : alpha_u;

    double exponent;
    if (opts.method == LaplaceMethod::nested)
    {
        exponent = nested_exponent(c, same_coeff, cross_coeff, alpha_same, direction, r);
    }
    else
    {
        // Same-direction transmitters are displaced from the PPP points in
        // both directions; cross-direction ones sit on them.
        exponent = 0.0;
        if (alpha_same > 0.0)
            exponent += alpha_same * displaced_exponent(c, same_coeff, !dl, r);
        if (alpha_same < 1.0)
            exponent += (1.0 - alpha_same) * radial_exponent(c, cross_coeff, dl, r);
    }
    return std::exp(-exponent);
}

double coverage_linear(double gamma,
                       Direction direction,
                       SmallCellScenario const& scn,
                       AnalyticOptions const& opts)
{
    scn.validate();
    opts.quad.validate();
    double const ell = 1.0 / std::sqrt(kPi * scn.lambda);
    bool const dl = direction == Direction::dl;
    double const exponent = dl ? scn.prop.two_b : scn.prop.two_b * (1.0 - scn.prop.k);
    double const power = dl ? scn.p_eff() : scn.p_star_eff();
    double const noise = scn.noise();

    // u = lambda pi r^2 ~ Exp(1) through w = 1 - exp(-u).
    auto integrand = [&](double w) {
        double const u = -std::log1p(-w);
        double const r = ell * std::sqrt(u);
        double const v = gamma * std::pow(r, exponent) / power;
        double const weight = std::exp(-v * noise);
        if (weight == 0.0)
            return 0.0;
        double const lt = dl ? laplace_dl(v, r, scn, opts) : laplace_ul(v, r, scn, opts);
        return weight * lt;
    };
    double const value = integrate(integrand, 0.0, -std::expm1(-kServingUMax),
                                   opts.quad.outer_abs_tol, opts.quad.max_intervals, "coverage")
                             .value;
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace

double laplace_dl(double v, double r, SmallCellScenario const& scn, AnalyticOptions const& opts)
{
    return laplace(v, r, Direction::dl, scn, opts);
}

double laplace_ul(double v, double r, SmallCellScenario const& scn, AnalyticOptions const& opts)
{
    return laplace(v, r, Direction::ul, scn, opts);
}

double coverage_ppp(double gamma_db,
                    Direction direction,
                    SmallCellScenario const& scn,
                    AnalyticOptions const& opts)
{
    return coverage_linear(db_to_linear(gamma_db), direction, scn, opts);
}

double coverage_ppp_dl(double gamma_db, SmallCellScenario const& scn, AnalyticOptions const& opts)
{
    return coverage_ppp(gamma_db, Direction::dl, scn, opts);
}

double coverage_ppp_ul(double gamma_db, SmallCellScenario const& scn, AnalyticOptions const& opts)
{
    return coverage_ppp(gamma_db, Direction::ul, scn, opts);
}

CoverageCurve coverage_curve_ppp(std::vector<double> const& gamma_grid_db,
                                 Direction direction,
                                 SmallCellScenario const& scn,
                                 AnalyticOptions const& opts)
{
    validate_gamma_grid(gamma_grid_db);
    CoverageCurve curve;
    curve.gamma_db = gamma_grid_db;
    for (double g : gamma_grid_db)
    {
        curve.value.push_back(coverage_ppp(g, direction, scn, opts));
        curve.ci_halfwidth.push_back(0.0);
    }
    return curve;
}

double ase_from_coverage(std::function<double(double)> const& theta, AnalyticOptions const& opts)
{
    if (!(opts.ase_abs_tol > 0.0))
        throw DomainError("ase: ase_abs_tol must be positive");
    // t = ln(gamma) over [ln 1e-8, ln 1e12]; below the range theta is ~1.
    double const t_lo = std::log(1e-8);
    double const t_hi = std::log(1e12);
    auto integrand = [&](double t) {
        double const g = std::exp(t);
        return theta(g) * g / (1.0 + g);
    };
    double const body = integrate(integrand, t_lo, t_hi, opts.ase_abs_tol * std::numbers::ln2,
                                  opts.quad.max_intervals, "spectral efficiency")
                            .value;
    double const g_lo = std::exp(t_lo);
    double const head = theta(g_lo) * std::log1p(g_lo);
    return (body + head) / std::numbers::ln2;
}

double ase(SmallCellScenario const& scn, Direction direction, AnalyticOptions const& opts)
{
    return ase_from_coverage(
        [&](double gamma) { return coverage_linear(gamma, direction, scn, opts); }, opts);
}

}  // namespace tddgeom::ppp
