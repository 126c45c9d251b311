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

#ifndef TDDGEOM_HEXGRID_HPP
#define TDDGEOM_HEXGRID_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "tddgeom/coverage.hpp"
#include "tddgeom/model.hpp"

namespace tddgeom::hexgrid {

using Point = std::complex<double>;

/// Hexagonal ring index of the site delta*(m + n e^{i pi/3}).
int ring_index(int m, int n) noexcept;

/// Sites of rings 1..net.rings (origin excluded), ordered by ring.
std::vector<Point> lattice_points(MacroNetwork const& net);

/// Continuum estimate of sum |s|^{-2b} over the sites beyond `rings`.
///
/// Integrates the site density 2/(sqrt(3) delta^2) outside the hexagon of
/// corner radius (rings + 1/2) delta, which is the union of the Voronoi
/// cells of the retained rings.
double lattice_tail(double two_b, double delta, int rings);

/// Sum over the truncated lattice of (delta/|s|)^{2b}, optionally
/// tail-corrected. Equals 6 omega(b) for the infinite lattice.
double lattice_sum(double two_b, MacroNetwork const& net, bool tail_correction = true);

/// DL-to-DL interference-to-signal ratio at a mobile, by direct summation:
/// sum over sites of (r / |s - z0|)^{2b}.
double bruteforce_isr_dl(MobilePolar const& m,
                         MacroNetwork const& net,
                         PropagationParams const& prop,
                         bool tail_correction = true);

/// Mean of bruteforce_isr_dl over the angle of the mobile (uniform grid
/// over one 60-degree period).
double bruteforce_isr_dl_theta_average(double r,
                                       MacroNetwork const& net,
                                       PropagationParams const& prop,
                                       int n_theta = 64,
                                       bool tail_correction = true);

struct UlDlOptions
{
    /// Draw the mobile angle uniformly per sample instead of using m.theta.
    bool average_theta = true;
    /// Rings evaluated on every sample.
    int near_rings = 6;
    /// Remaining rings are evaluated on every far_stride-th sample.
    std::size_t far_stride = 100;
    unsigned workers = 0;
};

/// Monte Carlo estimate of the UL-to-DL ratio: every site hosts an
/// uplink mobile uniform in the disk of radius R transmitting with
/// fractional power control, its power at z0 relative to P r^{-2b}.
McEstimate bruteforce_isr_ul_dl(MobilePolar const& m,
                                MacroNetwork const& net,
                                PropagationParams const& prop,
                                std::size_t n_samples,
                                std::uint64_t seed,
                                UlDlOptions const& opts = {});

enum class InterfererModel
{
    /// Every site draws its direction from Bernoulli(alpha_d).
    bernoulli,
    /// Diagnostic: each site contributes alpha_d DL + alpha_u UL power.
    mean_field
};

struct MacroMcOptions
{
    unsigned workers = 0;
    InterfererModel interferers = InterfererModel::bernoulli;
};

/// One Monte Carlo realisation. i_same is interference from sites in the
/// same direction as the serving link, i_cross from the opposite one.
struct MacroDraw
{
    double r = 0.0;
    double signal = 0.0;
    double i_same = 0.0;
    double i_cross = 0.0;
    double noise = 0.0;
    double sinr = 0.0;
};

MacroDraw macro_draw(MacroNetwork const& net,
                     PropagationParams const& prop,
                     TddMix const& mix,
                     Direction direction,
                     std::vector<Point> const& sites,
                     std::uint64_t seed,
                     std::uint64_t draw_index,
                     InterfererModel interferers = InterfererModel::bernoulli);

std::vector<MacroDraw> mc_draws_macro(MacroNetwork const& net,
                                      PropagationParams const& prop,
                                      TddMix const& mix,
                                      Direction direction,
                                      std::size_t n_draws,
                                      std::uint64_t seed,
                                      MacroMcOptions const& opts = {});

CoverageCurve mc_coverage_macro(MacroNetwork const& net,
                                PropagationParams const& prop,
                                TddMix const& mix,
                                Direction direction,
                                std::vector<double> const& gamma_grid_db,
                                std::size_t n_draws,
                                std::uint64_t seed,
                                MacroMcOptions const& opts = {});

}  // namespace tddgeom::hexgrid

#endif  // TDDGEOM_HEXGRID_HPP
