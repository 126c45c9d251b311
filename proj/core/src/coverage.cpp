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

#include "tddgeom/coverage.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "tddgeom/errors.hpp"
#include "tddgeom/units.hpp"

namespace tddgeom {

std::string_view to_string(Direction d) noexcept
{
    return d == Direction::dl ? "DL" : "UL";
}

Direction parse_direction(std::string_view text)
{
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "DL")
        return Direction::dl;
    if (upper == "UL")
        return Direction::ul;
    throw DomainError("direction must be DL or UL, got '" + std::string(text) + "'");
}

void validate_gamma_grid(std::vector<double> const& gamma_db)
{
    std::vector<std::string> issues;
    if (gamma_db.empty())
        issues.emplace_back("gamma grid is empty");
    for (std::size_t i = 0; i < gamma_db.size(); ++i)
    {
        if (!std::isfinite(gamma_db[i]))
            issues.push_back("gamma grid entry " + std::to_string(i) + " is not finite");
        else if (i > 0 && !(gamma_db[i] > gamma_db[i - 1]))
            issues.push_back("gamma grid is not strictly increasing at entry " +
                             std::to_string(i));
    }
    if (!issues.empty())
        throw ConfigError(std::move(issues));
}

CoverageCurve empirical_coverage(std::vector<double> const& sinr,
                                 std::vector<double> const& gamma_db)
{
    validate_gamma_grid(gamma_db);
    if (sinr.empty())
        throw DomainError("empirical_coverage: no samples");

    std::vector<double> sorted = sinr;
    std::sort(sorted.begin(), sorted.end());
    double const n = static_cast<double>(sorted.size());

    CoverageCurve curve;
    curve.gamma_db = gamma_db;
    for (double g_db : gamma_db)
    {
        double const g = db_to_linear(g_db);
        auto const above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), g);
        double const p = static_cast<double>(above) / n;
        curve.value.push_back(p);
        curve.ci_halfwidth.push_back(1.96 * std::sqrt(p * (1.0 - p) / n));
    }
    return curve;
}

McEstimate mean_estimate(std::vector<double> const& samples)
{
    McEstimate est;
    est.samples = samples.size();
    if (samples.empty())
        return est;
    double mean = 0.0;
    for (double s : samples)
        mean += s;
    mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples)
        ss += (s - mean) * (s - mean);
    est.value = mean;
    if (samples.size() > 1)
        est.std_error =
            std::sqrt(ss / static_cast<double>(samples.size() - 1) / static_cast<double>(samples.size()));
    return est;
}

}  // namespace tddgeom
