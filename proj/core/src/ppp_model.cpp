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

#include "tddgeom/ppp_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tddgeom/errors.hpp"
#include "tddgeom/parallel.hpp"
#include "tddgeom/rng.hpp"

namespace tddgeom::ppp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kSampleStream = 0;
constexpr std::uint64_t kDisplaceStream = 1;

inline double inv_pow(double dist2, double b)
{
    return std::exp(-b * std::log(dist2));
}

std::uint64_t poisson(StreamRng& rng, double mean)
{
    if (!(mean > 0.0))
        return 0;
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(rng);
}

double fading(StreamRng& rng, Fading model)
{
    return model == Fading::rayleigh ? rng.exponential() : 1.0;
}

// Mean interference from transmitters farther than the window radius.
double far_field(SmallCellScenario const& scn)
{
    double const b = scn.prop.b();
    double const bk = b * scn.prop.k;
    double const rho_moment = std::pow(kPi * scn.lambda, -bk) * std::tgamma(1.0 + bk);
    double const per_point = scn.mix.alpha_d * scn.p_eff() +
                             scn.mix.alpha_u() * scn.p_star_eff() * rho_moment;
    return scn.lambda * kTwoPi * std::pow(scn.window_radius, 2.0 - 2.0 * b) / (2.0 * b - 2.0) *
           per_point;
}

struct Powers
{
    double b;
    double bk;
    double p;
    double p_star;
    double alpha_d;
    double lambda;
};

Powers powers_of(SmallCellScenario const& scn)
{
    return {scn.prop.b(), scn.prop.b() * scn.prop.k, scn.p_eff(), scn.p_star_eff(),
            scn.mix.alpha_d, scn.lambda};
}

void draw_displaced(SmallCellScenario const& scn,
                    Direction direction,
                    StreamRng& rng,
                    std::optional<double> fixed_r,
                    PppDraw& d)
{
    Powers const pw = powers_of(scn);
    double const w = scn.window_radius;
    d.r = fixed_r ? *fixed_r : sample_rayleigh(pw.lambda, rng.uniform());
    double const serving_fade = fading(rng, scn.fading);
    if (direction == Direction::dl)
        d.signal = pw.p * serving_fade * std::pow(d.r, -2.0 * pw.b);
    else
        d.signal = pw.p_star * serving_fade * std::pow(d.r, 2.0 * pw.bk - 2.0 * pw.b);

    if (d.r >= w)
        return;
    double const r2 = d.r * d.r;
    double const span = w * w - r2;
    std::uint64_t const n = poisson(rng, pw.lambda * kPi * span);
    for (std::uint64_t i = 0; i < n; ++i)
    {
        double const x = std::sqrt(r2 + span * rng.uniform());
        Point const z = std::polar(x, kTwoPi * rng.uniform());
        double const rho = sample_rayleigh(pw.lambda, rng.uniform());
        Point const offset = std::polar(rho, kTwoPi * rng.uniform());
        bool const is_dl = rng.uniform() < pw.alpha_d;
        double const h = fading(rng, scn.fading);
        double const rho_fpc = std::exp(2.0 * pw.bk * std::log(rho));

        if (direction == Direction::dl)
        {
            // z is an interfering mobile; its cell sits at z + offset.
            if (is_dl)
                d.i_same += pw.p * h * inv_pow(std::norm(z + offset), pw.b);
            else
                d.i_cross += pw.p_star * rho_fpc * h * inv_pow(x * x, pw.b);
        }
        else
        {
            // z is an interfering cell; its mobile sits at z - offset.
            if (is_dl)
                d.i_cross += pw.p * h * inv_pow(x * x, pw.b);
            else
                d.i_same += pw.p_star * rho_fpc * h * inv_pow(std::norm(z - offset), pw.b);
        }
    }
}

void draw_nearest(SmallCellScenario const& scn, Direction direction, StreamRng& rng, PppDraw& d)
{
    Powers const pw = powers_of(scn);
    double const w = scn.window_radius;
    std::uint64_t const n = poisson(rng, pw.lambda * kPi * w * w);
    std::vector<Point> bs(n);
    for (auto& s : bs)
        s = std::polar(w * std::sqrt(rng.uniform()), kTwoPi * rng.uniform());

    std::size_t serving = std::numeric_limits<std::size_t>::max();
    double const serving_fade = fading(rng, scn.fading);
    if (direction == Direction::dl)
    {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < bs.size(); ++i)
        {
            if (std::norm(bs[i]) < best)
            {
                best = std::norm(bs[i]);
                serving = i;
            }
        }
        if (serving == std::numeric_limits<std::size_t>::max())
            return;
        d.r = std::sqrt(best);
        d.signal = pw.p * serving_fade * std::pow(d.r, -2.0 * pw.b);
    }
    else
    {
        // Typical cell at the origin; its user must be closer to it than to
        // any other cell.
        Point user{};
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt)
        {
            user = std::polar(sample_rayleigh(pw.lambda, rng.uniform()), kTwoPi * rng.uniform());
            double const own = std::norm(user);
            found = true;
            for (auto const& s : bs)
            {
                if (std::norm(user - s) < own)
                {
                    found = false;
                    break;
                }
            }
        }
        if (!found)
            throw DomainError("ppp nearest association: could not place the typical user");
        d.r = std::abs(user);
        d.signal = pw.p_star * serving_fade * std::pow(d.r, 2.0 * pw.bk - 2.0 * pw.b);
    }

    for (std::size_t i = 0; i < bs.size(); ++i)
    {
        double const rho = sample_rayleigh(pw.lambda, rng.uniform());
        Point const offset = std::polar(rho, kTwoPi * rng.uniform());
        bool const is_dl = rng.uniform() < pw.alpha_d;
        double const h = fading(rng, scn.fading);
        if (i == serving)
            continue;
        double const contrib =
            is_dl ? pw.p * h * inv_pow(std::norm(bs[i]), pw.b)
                  : pw.p_star * std::exp(2.0 * pw.bk * std::log(rho)) * h *
                        inv_pow(std::norm(bs[i] + offset), pw.b);
        bool const same = (direction == Direction::dl) == is_dl;
        (same ? d.i_same : d.i_cross) += contrib;
    }
}

}  // namespace

double sample_rayleigh(double lambda, double uniform01)
{
    return std::sqrt(-std::log(uniform01) / (kPi * lambda));
}

std::vector<Point> sample_ppp(double lambda, double window_radius, std::uint64_t seed)
{
    if (!(lambda > 0.0) || !(window_radius > 0.0))
        throw DomainError("sample_ppp: lambda and window_radius must be positive");
    StreamRng rng(seed, kSampleStream);
    std::uint64_t const n = poisson(rng, lambda * kPi * window_radius * window_radius);
    std::vector<Point> pts(n);
    for (auto& p : pts)
        p = std::polar(window_radius * std::sqrt(rng.uniform()), kTwoPi * rng.uniform());
    return pts;
}

std::vector<Point> displace_cells(std::vector<Point> const& users,
                                  double lambda,
                                  std::uint64_t seed)
{
    if (!(lambda > 0.0))
        throw DomainError("displace_cells: lambda must be positive");
    StreamRng rng(seed, kDisplaceStream);
    std::vector<Point> cells;
    cells.reserve(users.size());
    for (auto const& u : users)
    {
        double const rho = sample_rayleigh(lambda, rng.uniform());
        cells.push_back(u + std::polar(rho, kTwoPi * rng.uniform()));
    }
    return cells;
}

PppDraw ppp_draw(SmallCellScenario const& scn,
                 Direction direction,
                 std::uint64_t seed,
                 std::uint64_t draw_index,
                 std::optional<double> fixed_r,
                 bool far_field_correction)
{
    StreamRng rng(seed, draw_index);
    PppDraw d;
    d.noise = scn.noise();
    if (scn.association == Association::displaced)
    {
        draw_displaced(scn, direction, rng, fixed_r, d);
    }
    else
    {
        if (fixed_r)
            throw DomainError("ppp_draw: a pinned serving distance needs displaced association");
        draw_nearest(scn, direction, rng, d);
    }
    if (far_field_correction)
        d.i_far = far_field(scn);
    double const denom = d.i_same + d.i_cross + d.i_far + d.noise;
    d.sinr = denom > 0.0 ? d.signal / denom : std::numeric_limits<double>::infinity();
    return d;
}

std::vector<PppDraw> mc_draws_ppp(SmallCellScenario const& scn,
                                  Direction direction,
                                  std::size_t n_draws,
                                  std::uint64_t seed,
                                  PppMcOptions const& opts)
{
    scn.validate();
    if (n_draws < 1)
        throw DomainError("mc_coverage_ppp: n_draws must be >= 1");
    std::vector<PppDraw> draws(n_draws);
    parallel_for(n_draws, opts.workers, [&](std::size_t i) {
        draws[i] = ppp_draw(scn, direction, seed, i, std::nullopt, opts.far_field_correction);
    });
    return draws;
}

CoverageCurve mc_coverage_ppp(SmallCellScenario const& scn,
                              Direction direction,
                              std::vector<double> const& gamma_grid_db,
                              std::size_t n_draws,
                              std::uint64_t seed,
                              PppMcOptions const& opts)
{
    validate_gamma_grid(gamma_grid_db);
    auto const draws = mc_draws_ppp(scn, direction, n_draws, seed, opts);
    std::vector<double> sinr;
    sinr.reserve(draws.size());
    for (auto const& d : draws)
        sinr.push_back(d.sinr);
    return empirical_coverage(sinr, gamma_grid_db);
}

McEstimate mc_ase_ppp(SmallCellScenario const& scn,
                      Direction direction,
                      std::size_t n_draws,
                      std::uint64_t seed,
                      PppMcOptions const& opts)
{
    auto const draws = mc_draws_ppp(scn, direction, n_draws, seed, opts);
    std::vector<double> se;
    se.reserve(draws.size());
    for (auto const& d : draws)
        se.push_back(std::log2(1.0 + d.sinr));
    return mean_estimate(se);
}

McEstimate mc_laplace_ppp(double v,
                          double r,
                          SmallCellScenario const& scn,
                          Direction direction,
                          std::size_t n_draws,
                          std::uint64_t seed,
                          PppMcOptions const& opts)
{
    scn.validate();
    if (!(v >= 0.0) || !(r >= 0.0))
        throw DomainError("mc_laplace_ppp: requires v >= 0 and r >= 0");
    if (n_draws < 1)
        throw DomainError("mc_laplace_ppp: n_draws must be >= 1");
    std::vector<double> values(n_draws);
    parallel_for(n_draws, opts.workers, [&](std::size_t i) {
        PppDraw const d = ppp_draw(scn, direction, seed, i, r, opts.far_field_correction);
        values[i] = std::exp(-v * (d.i_same + d.i_cross + d.i_far));
    });
    return mean_estimate(values);
}

}  // namespace tddgeom::ppp
