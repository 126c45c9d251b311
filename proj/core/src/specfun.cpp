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

#include "tddgeom/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <math.h>  // lgamma_r

namespace tddgeom::specfun {
namespace {

// B_{2j} / (2j)! for j = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
    657931.0 / 186313420339200000000000.0,
    -3392780147.0 / 37893265687455865519472640000000.0,
    1723168255201.0 / 759790291646040068357842010112000000.0,
};

// Above this s the Dirichlet series itself converges geometrically fast.
constexpr double kDirectSumThreshold = 40.0;

void require_zeta_domain(double s, double q, char const* who)
{
    if (!(s > 1.0))
        throw DomainError(std::string(who) + ": requires s > 1");
    if (!(q > 0.0) || !std::isfinite(q))
        throw DomainError(std::string(who) + ": requires q > 0");
}

double scaled_direct(double s, double q, SeriesControl const& ctrl)
{
    SeriesSum sum(ctrl, "hurwitz_zeta direct sum");
    for (std::size_t n = 0;; ++n)
    {
        double const term = std::pow(q / (static_cast<double>(n) + q), s);
        if (sum.add(term))
            return sum.value();
    }
}

// Euler-Maclaurin: N leading terms, the integral of the remainder, half the
// first omitted term and Bernoulli corrections until they fall below rel_tol.
double scaled_euler_maclaurin(double s, double q, SeriesControl const& ctrl)
{
    int const n_lead = std::max(12, static_cast<int>(std::ceil(s)));
    double head = 0.0;
    for (int n = 0; n < n_lead; ++n)
        head += std::pow(q / (n + q), s);

    double const a = n_lead + q;
    double const a_pow = std::pow(q / a, s);  // q^s a^{-s}
    double total = head + a * a_pow / (s - 1.0) + 0.5 * a_pow;

    // poch = s (s+1) ... (s+2j-2); inv_a = a^{-(2j-1)}
    double poch = s;
    double inv_a = 1.0 / a;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j)
    {
        double const term = kBernoulliOverFactorial[j] * poch * inv_a * a_pow;
        total += term;
        if (std::abs(term) <= ctrl.rel_tol * 1e-3 * std::abs(total))
            return total;
        if (std::abs(term) > prev)
            break;
        prev = std::abs(term);
        poch *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        inv_a /= a * a;
    }
    throw TruncationError("hurwitz_zeta Euler-Maclaurin correction", total,
                          kBernoulliOverFactorial.size());
}

}  // namespace

double gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("gamma: requires x > 0");
    return std::tgamma(x);
}

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("log_gamma: requires x > 0");
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double hurwitz_zeta_scaled(double s, double q, SeriesControl const& ctrl)
{
    require_zeta_domain(s, q, "hurwitz_zeta");
    ctrl.validate();
    if (s >= kDirectSumThreshold)
        return scaled_direct(s, q, ctrl);
    return scaled_euler_maclaurin(s, q, ctrl);
}

double hurwitz_zeta(double s, double q, SeriesControl const& ctrl)
{
    return std::pow(q, -s) * hurwitz_zeta_scaled(s, q, ctrl);
}

double riemann_zeta(double s, SeriesControl const& ctrl)
{
    if (!(s > 1.0))
        throw DomainError("riemann_zeta: requires s > 1");
    return hurwitz_zeta_scaled(s, 1.0, ctrl);
}

double dirichlet_l3(double s, SeriesControl const& ctrl)
{
    if (!(s > 1.0))
        throw DomainError("dirichlet_l3: requires s > 1");
    // 3^{-s} zeta(s,1/3) = scaled(s,1/3);  3^{-s} zeta(s,2/3) = 2^{-s} scaled(s,2/3)
    return hurwitz_zeta_scaled(s, 1.0 / 3.0, ctrl) -
           std::exp2(-s) * hurwitz_zeta_scaled(s, 2.0 / 3.0, ctrl);
}

double omega(double z, SeriesControl const& ctrl)
{
    if (!(z > 1.0))
        throw DomainError("omega: lattice sum diverges for z <= 1");
    return riemann_zeta(z, ctrl) * dirichlet_l3(z, ctrl);
}

double shadowing_mean_factor(ShadowingSpec const& spec)
{
    spec.validate();
    double const sigma_nepers = spec.sigma_tilde_db * std::numbers::ln10 / 10.0;
    return std::exp(0.5 * sigma_nepers * sigma_nepers);
}

}  // namespace tddgeom::specfun
