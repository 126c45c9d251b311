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

#ifndef TDDGEOM_SPECFUN_HPP
#define TDDGEOM_SPECFUN_HPP

#include "tddgeom/series.hpp"

/// Special functions and hexagonal-lattice constants.  Everything here is a
/// pure function of its arguments.
namespace tddgeom::specfun {

/// Log-normal shadowing of the interferer/server power ratio.
struct ShadowingSpec
{
    /// Standard deviation of the ratio's dB value.
    double sigma_tilde_db = 0.0;

    void validate() const
    {
        if (!(sigma_tilde_db >= 0.0))
            throw DomainError("ShadowingSpec: sigma_tilde_db must be >= 0");
    }
};

/// Euler Gamma function, x > 0.
double gamma(double x);

/// log Gamma(x), x > 0.  Thread-safe (does not touch signgam).
double log_gamma(double x);

/// Riemann zeta function for real s > 1.
double riemann_zeta(double s, SeriesControl const& ctrl = {});

/// Hurwitz zeta sum_{n>=0} (n+q)^{-s} for s > 1, q > 0.
double hurwitz_zeta(double s, double q, SeriesControl const& ctrl = {});

/// q^s * hurwitz_zeta(s, q), i.e. sum_{n>=0} (1 + n/q)^{-s}.  Stays finite
/// for large s where hurwitz_zeta itself overflows.
double hurwitz_zeta_scaled(double s, double q, SeriesControl const& ctrl = {});

/// Dirichlet L-function of the non-principal character mod 3,
/// 3^{-s} (zeta(s,1/3) - zeta(s,2/3)).
double dirichlet_l3(double s, SeriesControl const& ctrl = {});

/// Hexagonal lattice constant omega(z) = 3^{-z} zeta(z) (zeta(z,1/3) - zeta(z,2/3)).
/// For a lattice with spacing delta, sum over nonzero sites of |s|^{-2z} is
/// 6 omega(z) delta^{-2z}.
double omega(double z, SeriesControl const& ctrl = {});

/// E[10^{Y/10}] for Y ~ N(0, sigma^2): exp((sigma ln10 / 10)^2 / 2).
double shadowing_mean_factor(ShadowingSpec const& spec);

}  // namespace tddgeom::specfun

#endif  // TDDGEOM_SPECFUN_HPP
