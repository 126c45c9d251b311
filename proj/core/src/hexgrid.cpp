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

#include "tddgeom/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "tddgeom/errors.hpp"
#include "tddgeom/parallel.hpp"
#include "tddgeom/quadrature.hpp"
#include "tddgeom/rng.hpp"

namespace tddgeom::hexgrid {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |d|^{-2b} from the squared distance.
inline double inv_pow(double dist2, double b)
{
    return std::exp(-b * std::log(dist2));
}

std::size_t sites_within(int rings)
{
    return 3u * static_cast<std::size_t>(rings) * static_cast<std::size_t>(rings + 1);
}

}  // namespace

int ring_index(int m, int n) noexcept
{
    return std::max({std::abs(m), std::abs(n), std::abs(m + n)});
}

std::vector<Point> lattice_points(MacroNetwork const& net)
{
    if (net.rings < 1)
        throw DomainError("lattice_points: rings must be >= 1");
    if (!(net.delta > 0.0))
        throw DomainError("lattice_points: delta must be positive");

    int const n_rings = net.rings;
    Point const e1{net.delta, 0.0};
    Point const e2 = net.delta * std::polar(1.0, std::numbers::pi / 3.0);

    std::vector<std::vector<Point>> by_ring(static_cast<std::size_t>(n_rings) + 1);
    for (int m = -n_rings; m <= n_rings; ++m)
    {
        for (int n = -n_rings; n <= n_rings; ++n)
        {
            int const ring = ring_index(m, n);
            if (ring >= 1 && ring <= n_rings)
                by_ring[static_cast<std::size_t>(ring)].push_back(
                    static_cast<double>(m) * e1 + static_cast<double>(n) * e2);
        }
    }

    std::vector<Point> out;
    out.reserve(sites_within(n_rings));
    for (auto const& ring : by_ring)
        out.insert(out.end(), ring.begin(), ring.end());
    return out;
}

double lattice_tail(double two_b, double delta, int rings)
{
    if (!(two_b > 2.0))
        throw DomainError("lattice_tail: requires 2b > 2");
    double const b = 0.5 * two_b;
    double const density = 2.0 / (std::numbers::sqrt3 * delta * delta);
    double const corner = (rings + 0.5) * delta;
    double const apothem = corner * std::numbers::sqrt3 / 2.0;
    auto const angular = integrate(
        [&](double psi) { return std::pow(std::cos(psi), two_b - 2.0); }, 0.0,
        std::numbers::pi / 6.0, 1e-15, 200, "lattice_tail angular integral");
    return density * 12.0 * std::pow(apothem, 2.0 - two_b) / (2.0 * b - 2.0) *
           angular.value;
}

double lattice_sum(double two_b, MacroNetwork const& net, bool tail_correction)
{
    net.validate();
    double const b = 0.5 * two_b;
    double const d2 = net.delta * net.delta;
    double sum = 0.0;
    auto const sites = lattice_points(net);
    // Far rings first keeps the accumulation well conditioned.
    for (auto it = sites.rbegin(); it != sites.rend(); ++it)
        sum += inv_pow(std::norm(*it) / d2, b);
    if (tail_correction)
        sum += lattice_tail(two_b, net.delta, net.rings) * std::pow(net.delta, two_b);
    return sum;
}

namespace {

double isr_dl_sum(std::vector<Point> const& sites, Point z0, double r, double b)
{
    double sum = 0.0;
    for (auto it = sites.rbegin(); it != sites.rend(); ++it)
        sum += inv_pow(std::norm(*it - z0), b);
    return std::pow(r, 2.0 * b) * sum;
}

}  // namespace

double bruteforce_isr_dl(MobilePolar const& m,
                         MacroNetwork const& net,
                         PropagationParams const& prop,
                         bool tail_correction)
{
    net.validate();
    prop.validate();
    if (m.r == 0.0)
        return 0.0;
    auto const sites = lattice_points(net);
    double value = isr_dl_sum(sites, std::polar(m.r, m.theta), m.r, prop.b());
    if (tail_correction)
        value += std::pow(m.r, prop.two_b) * lattice_tail(prop.two_b, net.delta, net.rings);
    return value;
}

double bruteforce_isr_dl_theta_average(double r,
                                       MacroNetwork const& net,
                                       PropagationParams const& prop,
                                       int n_theta,
                                       bool tail_correction)
{
    net.validate();
    prop.validate();
    if (n_theta < 1)
        throw DomainError("bruteforce_isr_dl_theta_average: n_theta must be >= 1");
    if (r == 0.0)
        return 0.0;
    auto const sites = lattice_points(net);
    double const period = std::numbers::pi / 3.0;
    double sum = 0.0;
    for (int j = 0; j < n_theta; ++j)
    {
        double const theta = (j + 0.5) * period / n_theta;
        sum += isr_dl_sum(sites, std::polar(r, theta), r, prop.b());
    }
    double value = sum / n_theta;
    if (tail_correction)
        value += std::pow(r, prop.two_b) * lattice_tail(prop.two_b, net.delta, net.rings);
    return value;
}

McEstimate bruteforce_isr_ul_dl(MobilePolar const& m,
                                MacroNetwork const& net,
                                PropagationParams const& prop,
                                std::size_t n_samples,
                                std::uint64_t seed,
                                UlDlOptions const& opts)
{
    net.validate();
    prop.validate();
    if (n_samples < 1)
        throw DomainError("bruteforce_isr_ul_dl: n_samples must be >= 1");
    if (opts.far_stride < 1)
        throw DomainError("bruteforce_isr_ul_dl: far_stride must be >= 1");

    double const b = prop.b();
    double const bk = b * prop.k;
    double const radius = net.cell_radius;
    double const ratio = prop.p_star_eff() / prop.p_eff();
    double const prefactor = ratio * std::pow(m.r, prop.two_b);

    auto const sites = lattice_points(net);
    std::size_t const n_near =
        std::min(sites.size(), sites_within(std::min(opts.near_rings, net.rings)));
    std::size_t const n_far_samples = (n_samples + opts.far_stride - 1) / opts.far_stride;

    std::vector<double> near(n_samples, 0.0);
    std::vector<double> far(n_far_samples, 0.0);

    auto site_term = [&](Point s, Point z0, StreamRng& rng) {
        double const rho = radius * std::sqrt(rng.uniform());
        double const phi = kTwoPi * rng.uniform();
        Point const z = s + std::polar(rho, phi);
        // rho^{2bk} / |z - z0|^{2b}
        return std::exp(2.0 * bk * std::log(rho) - b * std::log(std::norm(z - z0)));
    };

    parallel_for(n_samples, opts.workers, [&](std::size_t i) {
        StreamRng rng(seed, i);
        double const theta = opts.average_theta ? kTwoPi * rng.uniform() : m.theta;
        Point const z0 = std::polar(m.r, theta);
        double acc = 0.0;
        for (std::size_t j = 0; j < n_near; ++j)
            acc += site_term(sites[j], z0, rng);
        near[i] = prefactor * acc;
        if (i % opts.far_stride == 0)
        {
            double acc_far = 0.0;
            for (std::size_t j = n_near; j < sites.size(); ++j)
                acc_far += site_term(sites[j], z0, rng);
            far[i / opts.far_stride] = prefactor * acc_far;
        }
    });

    McEstimate const near_est = mean_estimate(near);
    McEstimate const far_est = mean_estimate(far);
    // E[rho^{2bk}] for rho uniform in the disk.
    double const rho_moment = 2.0 * std::pow(radius, 2.0 * bk) / (2.0 * bk + 2.0);
    double const tail =
        prefactor * rho_moment * lattice_tail(prop.two_b, net.delta, net.rings);

    McEstimate out;
    out.value = near_est.value + far_est.value + tail;
    out.std_error = std::hypot(near_est.std_error, far_est.std_error);
    out.samples = n_samples;
    return out;
}

MacroDraw macro_draw(MacroNetwork const& net,
                     PropagationParams const& prop,
                     TddMix const& mix,
                     Direction direction,
                     std::vector<Point> const& sites,
                     std::uint64_t seed,
                     std::uint64_t draw_index,
                     InterfererModel interferers)
{
    double const b = prop.b();
    double const bk = b * prop.k;
    double const p = prop.p_eff();
    double const p_star = prop.p_star_eff();
    double const radius = net.cell_radius;
    double const alpha_d = mix.alpha_d;
    bool const mean_field = interferers == InterfererModel::mean_field;

    StreamRng rng(seed, draw_index);
    MacroDraw d;
    d.r = radius * std::sqrt(rng.uniform());
    Point const z0 = std::polar(d.r, kTwoPi * rng.uniform());
    d.noise = prop.noise();

    // Receiver of the serving link: the mobile for DL, the site at 0 for UL.
    Point const rx = direction == Direction::dl ? z0 : Point{0.0, 0.0};
    double dl_power = 0.0;
    double ul_power = 0.0;
    for (Point const s : sites)
    {
        double const u_dir = rng.uniform();
        double const rho = radius * std::sqrt(rng.uniform());
        double const phi = kTwoPi * rng.uniform();
        bool const is_dl = u_dir < alpha_d;

        if (mean_field || is_dl)
        {
            double const w = mean_field ? alpha_d : 1.0;
            dl_power += w * p * inv_pow(std::norm(s - rx), b);
        }
        if (mean_field || !is_dl)
        {
            double const w = mean_field ? 1.0 - alpha_d : 1.0;
            Point const z = s + std::polar(rho, phi);
            ul_power += w * p_star *
                        std::exp(2.0 * bk * std::log(rho) - b * std::log(std::norm(z - rx)));
        }
    }

    if (direction == Direction::dl)
    {
        d.signal = p * std::pow(d.r, -prop.two_b);
        d.i_same = dl_power;
        d.i_cross = ul_power;
    }
    else
    {
        d.signal = p_star * std::pow(d.r, prop.two_b * (prop.k - 1.0));
        d.i_same = ul_power;
        d.i_cross = dl_power;
    }
    d.sinr = d.signal / (net.load_eta * (d.i_same + d.i_cross) + d.noise);
    return d;
}

std::vector<MacroDraw> mc_draws_macro(MacroNetwork const& net,
                                      PropagationParams const& prop,
                                      TddMix const& mix,
                                      Direction direction,
                                      std::size_t n_draws,
                                      std::uint64_t seed,
                                      MacroMcOptions const& opts)
{
    net.validate();
    prop.validate();
    mix.validate();
    if (n_draws < 1)
        throw DomainError("mc_coverage_macro: n_draws must be >= 1");

    auto const sites = lattice_points(net);
    std::vector<MacroDraw> draws(n_draws);
    parallel_for(n_draws, opts.workers, [&](std::size_t i) {
        draws[i] = macro_draw(net, prop, mix, direction, sites, seed, i, opts.interferers);
    });
    return draws;
}

CoverageCurve mc_coverage_macro(MacroNetwork const& net,
                                PropagationParams const& prop,
                                TddMix const& mix,
                                Direction direction,
                                std::vector<double> const& gamma_grid_db,
                                std::size_t n_draws,
                                std::uint64_t seed,
                                MacroMcOptions const& opts)
{
    validate_gamma_grid(gamma_grid_db);
    auto const draws = mc_draws_macro(net, prop, mix, direction, n_draws, seed, opts);
    std::vector<double> sinr;
    sinr.reserve(draws.size());
    for (auto const& d : draws)
        sinr.push_back(d.sinr);
    return empirical_coverage(sinr, gamma_grid_db);
}

}  // namespace tddgeom::hexgrid
