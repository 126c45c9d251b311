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

#ifndef TDDGEOM_PPP_ANALYTIC_HPP
#define TDDGEOM_PPP_ANALYTIC_HPP

#include <functional>

#include "tddgeom/coverage.hpp"
#include "tddgeom/model.hpp"
#include "tddgeom/quadrature.hpp"

namespace tddgeom::ppp {

enum class LaplaceMethod
{
    /// Angular integral done in closed form; two nested quadratures.
    reduced,
    /// Literal triple integral over distance, angle and displacement.
    nested
};

struct AnalyticOptions
{
    QuadratureControl quad{};
    LaplaceMethod method = LaplaceMethod::reduced;
    /// Absolute tolerance of the spectral-efficiency integral (bits/s/Hz).
    double ase_abs_tol = 1e-4;
};

/// E[exp(-v I_DL) | R = r] of the displaced-cell model.
double laplace_dl(double v, double r, SmallCellScenario const& scn, AnalyticOptions const& opts = {});

/// E[exp(-v I_UL) | R = r] of the displaced-cell model.
double laplace_ul(double v, double r, SmallCellScenario const& scn, AnalyticOptions const& opts = {});

double coverage_ppp_dl(double gamma_db, SmallCellScenario const& scn, AnalyticOptions const& opts = {});

double coverage_ppp_ul(double gamma_db, SmallCellScenario const& scn, AnalyticOptions const& opts = {});

double coverage_ppp(double gamma_db,
                    Direction direction,
                    SmallCellScenario const& scn,
                    AnalyticOptions const& opts = {});

CoverageCurve coverage_curve_ppp(std::vector<double> const& gamma_grid_db,
                                 Direction direction,
                                 SmallCellScenario const& scn,
                                 AnalyticOptions const& opts = {});

/// (1/ln 2) * integral over gamma of theta(gamma)/(1 + gamma), with theta
/// taking a linear threshold.
double ase_from_coverage(std::function<double(double)> const& theta,
                         AnalyticOptions const& opts = {});

double ase(SmallCellScenario const& scn, Direction direction, AnalyticOptions const& opts = {});

}  // namespace tddgeom::ppp

#endif  // TDDGEOM_PPP_ANALYTIC_HPP
