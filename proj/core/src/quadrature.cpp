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

#include "tddgeom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tddgeom {
namespace {

struct Segment
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(Segment const& other) const { return error < other.error; }
};

Segment gk15(std::function<double(double)> const& f, double a, double b)
{
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using Gauss = boost::math::quadrature::gauss<double, 7>;
    auto const& xk = Kronrod::abscissa();
    auto const& wk = Kronrod::weights();
    auto const& wg = Gauss::weights();

    double const mid = 0.5 * (a + b);
    double const half = 0.5 * (b - a);
    // Kronrod abscissae: x[0] = 0, even indices are the 7-point Gauss nodes.
    double const f0 = f(mid);
    double kronrod = wk[0] * f0;
    double gauss = wg[0] * f0;
    for (std::size_t i = 1; i < xk.size(); ++i)
    {
        double const dx = half * xk[i];
        double const fsum = f(mid - dx) + f(mid + dx);
        kronrod += wk[i] * fsum;
        if (i % 2 == 0)
            gauss += wg[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(std::function<double(double)> const& f,
                           double a,
                           double b,
                           double abs_tol,
                           std::size_t max_intervals,
                           std::string const& what,
                           double rel_tol)
{
    if (!(abs_tol > 0.0))
        throw DomainError(what + ": abs_tol must be positive");
    if (a == b)
        return {};
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError(what + ": integration limits must be finite");

    std::priority_queue<Segment> heap;
    Segment const first = gk15(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);

    while (error > std::max(abs_tol, rel_tol * std::abs(total)))
    {
        if (heap.size() >= max_intervals)
            throw IntegrationError(what, total, error);
        Segment const worst = heap.top();
        heap.pop();
        double const mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw IntegrationError(what + " (interval underflow)", total, error);
        Segment const left = gk15(f, worst.a, mid);
        Segment const right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if (!std::isfinite(total))
            throw IntegrationError(what + " (non-finite integrand)", total, error);
    }

    // Re-sum to avoid drift from the incremental updates.
    double value = 0.0;
    double err = 0.0;
    std::size_t const intervals = heap.size();
    while (!heap.empty())
    {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {value, err, intervals};
}

}  // namespace tddgeom
