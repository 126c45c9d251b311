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

#include "tddgeom/model.hpp"

#include <string>
#include <vector>

#include "tddgeom/units.hpp"

namespace tddgeom {

double PropagationParams::p_eff() const
{
    return dbm_to_mw(p_dl_dbm + offset_db());
}

double PropagationParams::p_star_eff() const
{
    return dbm_to_mw(p_star_dbm + offset_db());
}

double PropagationParams::noise() const
{
    return dbm_to_mw(p_noise_dbm);
}

void PropagationParams::validate() const
{
    std::vector<std::string> issues;
    if (!(two_b > 2.0) || !std::isfinite(two_b))
        issues.emplace_back("two_b must exceed 2");
    if (!(k >= 0.0 && k <= 1.0))
        issues.emplace_back("k must lie in [0, 1]");
    for (double v : {a_db, antenna_gain_db, p_dl_dbm, p_star_dbm})
    {
        if (!std::isfinite(v))
            issues.emplace_back("power and gain values must be finite");
    }
    // -inf dBm is accepted for a noiseless link.
    if (std::isnan(p_noise_dbm) || p_noise_dbm == INFINITY)
        issues.emplace_back("p_noise_dbm must be finite or -inf");
    if (!issues.empty())
        throw DomainError("PropagationParams: " + issues.front());
}

void MacroNetwork::validate() const
{
    if (!(delta > 0.0))
        throw DomainError("MacroNetwork: delta must be positive");
    if (!(cell_radius > 0.0) || cell_radius > delta / std::numbers::sqrt3 * (1.0 + 1e-12))
        throw DomainError("MacroNetwork: cell_radius must lie in (0, delta/sqrt(3)]");
    if (rings < 1)
        throw DomainError("MacroNetwork: rings must be >= 1");
    if (!(load_eta > 0.0 && load_eta <= 1.0))
        throw DomainError("MacroNetwork: load_eta must lie in (0, 1]");
}

double SmallCellScenario::p_eff() const
{
    return dbm_to_mw(p_small_dbm + prop.offset_db());
}

double SmallCellScenario::p_star_eff() const
{
    return dbm_to_mw(p_small_star_dbm + prop.offset_db());
}

void SmallCellScenario::validate() const
{
    prop.validate();
    mix.validate();
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("SmallCellScenario: lambda must be positive");
    if (!(window_radius > 0.0))
        throw DomainError("SmallCellScenario: window_radius must be positive");
    if (window_radius < min_window(lambda) * (1.0 - 1e-12))
        throw DomainError("SmallCellScenario: window_radius must be at least 5/sqrt(lambda)");
}

}  // namespace tddgeom
