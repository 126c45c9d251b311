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

#ifndef TDDGEOM_MODEL_HPP
#define TDDGEOM_MODEL_HPP

#include <cmath>
#include <numbers>

#include "tddgeom/errors.hpp"

namespace tddgeom {

/// Link budget of one tier. Distances are in km, powers in dBm, gains in dB.
///
/// Every transmit power of the tier is turned into an effective received
/// power mW(P + G - a): antenna gain and propagation factor are one common
/// offset, so ratios of interference to signal do not depend on them.
struct PropagationParams
{
    double two_b = 3.5;
    double a_db = 130.0;
    double k = 0.0;
    double antenna_gain_db = 16.0;
    double p_dl_dbm = 60.0;
    double p_star_dbm = 20.0;
    double p_noise_dbm = -93.0;

    double b() const noexcept { return 0.5 * two_b; }
    double offset_db() const noexcept { return antenna_gain_db - a_db; }
    double p_eff() const;
    double p_star_eff() const;
    double noise() const;

    void validate() const;
};

struct TddMix
{
    double alpha_d = 1.0;

    double alpha_u() const noexcept { return 1.0 - alpha_d; }

    void validate() const
    {
        if (!(alpha_d >= 0.0 && alpha_d <= 1.0))
            throw DomainError("TddMix: alpha_d must lie in [0, 1]");
    }
};

struct MacroNetwork
{
    double delta = 1.0;
    double cell_radius = 1.0 / std::numbers::sqrt3;
    int rings = 4;
    double load_eta = 1.0;

    double r_over_delta() const noexcept { return cell_radius / delta; }

    void validate() const;
};

/// Mobile position relative to its serving site.
struct MobilePolar
{
    double r = 0.0;
    double theta = 0.0;
};

enum class Fading
{
    rayleigh,
    none
};

/// How interfering cells and the serving distance are generated.
enum class Association
{
    /// Cells are Rayleigh-displaced copies of the mobile PPP; serving
    /// distance Rayleigh, interferers beyond it.
    displaced,
    /// Diagnostic: BS PPP with true nearest-BS association.
    nearest
};

struct SmallCellScenario
{
    double lambda = 10.0;
    double window_radius = 10.0 / std::sqrt(10.0);
    double p_small_dbm = 26.0;
    double p_small_star_dbm = 20.0;
    /// Supplies 2b, k, a, antenna gain and noise; its macro powers are unused.
    PropagationParams prop = {3.5, 130.0, 0.4, 0.0, 26.0, 20.0, -93.0};
    TddMix mix{};
    Fading fading = Fading::rayleigh;
    Association association = Association::displaced;

    /// Effective P~ and P~* in mW after the tier offset.
    double p_eff() const;
    double p_star_eff() const;
    double noise() const { return prop.noise(); }

    /// Smallest accepted window radius for a density.
    static double min_window(double lambda) { return 5.0 / std::sqrt(lambda); }
    /// Window used when none is configured.
    static double default_window(double lambda) { return 10.0 / std::sqrt(lambda); }

    void validate() const;
};

}  // namespace tddgeom

#endif  // TDDGEOM_MODEL_HPP
