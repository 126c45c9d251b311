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

#ifndef TDDGEOM_PPP_MODEL_HPP
#define TDDGEOM_PPP_MODEL_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "tddgeom/coverage.hpp"
#include "tddgeom/model.hpp"

namespace tddgeom::ppp {

using Point = std::complex<double>;

/// Homogeneous PPP of intensity lambda in the disk of radius window_radius.
std::vector<Point> sample_ppp(double lambda, double window_radius, std::uint64_t seed);

/// Rayleigh distance with density 2 pi lambda r exp(-lambda pi r^2).
double sample_rayleigh(double lambda, double uniform01);

/// Moves every point by rho e^{i phi}, rho Rayleigh(lambda), phi uniform.
std::vector<Point> displace_cells(std::vector<Point> const& users,
                                  double lambda,
                                  std::uint64_t seed);

struct PppMcOptions
{
    unsigned workers = 0;
    /// Adds the mean interference of the plane beyond the window.
    bool far_field_correction = true;
};

/// One Monte Carlo realisation seen by the typical receiver at the origin.
struct PppDraw
{
    double r = 0.0;
    double signal = 0.0;
    double i_same = 0.0;
    double i_cross = 0.0;
    double i_far = 0.0;
    double noise = 0.0;
    double sinr = 0.0;
};

/// Draws one realisation. When `fixed_r` is set the serving distance is
/// pinned (used for conditional Laplace estimates).
PppDraw ppp_draw(SmallCellScenario const& scn,
                 Direction direction,
                 std::uint64_t seed,
                 std::uint64_t draw_index,
                 std::optional<double> fixed_r = std::nullopt,
                 bool far_field_correction = true);

std::vector<PppDraw> mc_draws_ppp(SmallCellScenario const& scn,
                                  Direction direction,
                                  std::size_t n_draws,
                                  std::uint64_t seed,
                                  PppMcOptions const& opts = {});

CoverageCurve mc_coverage_ppp(SmallCellScenario const& scn,
                              Direction direction,
                              std::vector<double> const& gamma_grid_db,
                              std::size_t n_draws,
                              std::uint64_t seed,
                              PppMcOptions const& opts = {});

/// Mean of log2(1 + SINR).
McEstimate mc_ase_ppp(SmallCellScenario const& scn,
                      Direction direction,
                      std::size_t n_draws,
                      std::uint64_t seed,
                      PppMcOptions const& opts = {});

/// Estimate of E[exp(-v I) | R = r], I the interference without noise.
McEstimate mc_laplace_ppp(double v,
                          double r,
                          SmallCellScenario const& scn,
                          Direction direction,
                          std::size_t n_draws,
                          std::uint64_t seed,
                          PppMcOptions const& opts = {});

}  // namespace tddgeom::ppp

#endif  // TDDGEOM_PPP_MODEL_HPP
