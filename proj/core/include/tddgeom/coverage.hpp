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

#ifndef TDDGEOM_COVERAGE_HPP
#define TDDGEOM_COVERAGE_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace tddgeom {

enum class Direction
{
    dl,
    ul
};

std::string_view to_string(Direction d) noexcept;

/// Parses "DL"/"UL" (any case); throws DomainError otherwise.
Direction parse_direction(std::string_view text);

struct CoverageCurve
{
    std::vector<double> gamma_db;
    std::vector<double> value;
    /// 95% half-width of the Monte Carlo estimate; zero for analytic curves.
    std::vector<double> ci_halfwidth;

    std::size_t size() const noexcept { return gamma_db.size(); }
};

/// Throws ConfigError unless the grid is nonempty, finite and strictly increasing.
void validate_gamma_grid(std::vector<double> const& gamma_db);

/// Empirical CCDF P[SINR > gamma] of linear SINR samples with binomial
/// 95% half-widths.
CoverageCurve empirical_coverage(std::vector<double> const& sinr,
                                 std::vector<double> const& gamma_db);

/// Monte Carlo mean with its standard error.
struct McEstimate
{
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

/// Sequential mean / standard error of the samples (order-stable).
McEstimate mean_estimate(std::vector<double> const& samples);

}  // namespace tddgeom

#endif  // TDDGEOM_COVERAGE_HPP
