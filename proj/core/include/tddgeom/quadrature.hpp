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

#ifndef TDDGEOM_QUADRATURE_HPP
#define TDDGEOM_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "tddgeom/errors.hpp"

namespace tddgeom {

struct QuadratureControl
{
    /// Absolute tolerance of inner integrals (angle, displacement, radius).
    double inner_abs_tol = 1e-6;
    /// Absolute tolerance of the outermost integral.
    double outer_abs_tol = 1e-5;
    /// Cap on the number of subintervals of one adaptive integral.
    std::size_t max_intervals = 500;

    void validate() const
    {
        if (!(inner_abs_tol > 0.0) || !(outer_abs_tol > 0.0))
            throw DomainError("QuadratureControl: tolerances must be positive");
        if (max_intervals < 1)
            throw DomainError("QuadratureControl: max_intervals must be >= 1");
    }
};

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
    std::size_t intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration on a finite interval.
///
/// Bisects the interval with the largest error estimate until the summed
/// estimate is below max(abs_tol, rel_tol * |value|). Throws
/// IntegrationError when max_intervals is reached first.
QuadratureResult integrate(std::function<double(double)> const& f,
                           double a,
                           double b,
                           double abs_tol,
                           std::size_t max_intervals,
                           std::string const& what,
                           double rel_tol = 1e-12);

}  // namespace tddgeom

#endif  // TDDGEOM_QUADRATURE_HPP
