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

#ifndef TDDGEOM_MACRO_ANALYTIC_HPP
#define TDDGEOM_MACRO_ANALYTIC_HPP

#include <optional>
#include <vector>

#include "tddgeom/coverage.hpp"
#include "tddgeom/model.hpp"
#include "tddgeom/series.hpp"
#include "tddgeom/specfun.hpp"

namespace tddgeom::macro {

struct IsrBreakdown
{
    double dl_to_dl = 0.0;
    double ul_to_dl = 0.0;
    double ul_to_ul = 0.0;
    double dl_to_ul = 0.0;
    double total_dl = 0.0;
    double total_ul = 0.0;
};

/// Normalised noise terms of the SINR maps and the load.
struct SinrParams
{
    /// P_N delta^{2b} / P
    double y0 = 0.0;
    /// P_N delta^{2b(1-k)} / P*
    double y0_prime = 0.0;
    double eta = 1.0;

    static SinrParams from(MacroNetwork const& net, PropagationParams const& prop);

    void validate() const;
};

enum class InverseMethod
{
    bisection,
    series
};

/// Mean DL-to-DL ratio at normalised distance x = r/delta.
double isr_dl_dl(double x, double b, SeriesControl const& ctrl = {});

/// Natural log of the coefficient beta_h of the UL-to-DL series.
/// beta_h grows geometrically in h, so callers summing many terms should
/// work with this form.
double log_beta_h(int h, double b, double k, double r_over_delta, SeriesControl const& ctrl = {});

double beta_h(int h, double b, double k, double r_over_delta, SeriesControl const& ctrl = {});

/// Mean UL-to-DL ratio. Converges for x + R/delta < 1 (the disk of an
/// interfering mobile must not reach the receiver); DomainError otherwise.
/// `delta` converts R/delta back to km for the R^{2bk} power-control factor.
double isr_ul_dl(double x,
                 double b,
                 double k,
                 double r_over_delta,
                 double p_star_over_p,
                 double delta,
                 SeriesControl const& ctrl = {});

/// Coefficient of x^{2b(1-k)} in the mean UL-to-UL ratio.
double a1(double b, double k, double r_over_delta, SeriesControl const& ctrl = {});

/// Coefficient of x^{2b(1-k)} in the mean DL-to-UL ratio,
/// 6 (P/P*) omega(b) / delta^{2bk}.
double a2(double b, double k, double p_over_pstar, double delta, SeriesControl const& ctrl = {});

struct MacroModelOptions
{
    std::optional<specfun::ShadowingSpec> shadowing;
    SeriesControl series{};
    /// Replaces the noise/load terms derived from the network and powers.
    std::optional<SinrParams> sinr_override;
};

/// Macro-cell analytic model with cached series coefficients.
///
/// Construction evaluates every coefficient table once; afterwards all
/// member functions are const and safe to call concurrently.
class MacroModel
{
public:
    MacroModel(MacroNetwork const& net,
               PropagationParams const& prop,
               TddMix const& mix,
               MacroModelOptions const& opts = {});

    /// Upper end of the normalised distance range, 1/sqrt(3).
    static double x_max() noexcept;

    double r_over_delta() const noexcept { return q_; }
    double shadowing_factor() const noexcept { return shadow_; }
    SinrParams const& sinr_params() const noexcept { return sinr_; }
    double a1() const noexcept { return a1_; }
    double a2() const noexcept { return a2_; }

    double dl_to_dl(double x) const;
    /// UL-to-DL mean ratio. Past 0.95 (1 - R/delta), where the series stops
    /// converging, continues as the last value times (x/x_c)^{2b}.
    double ul_to_dl(double x) const;
    double ul_to_ul(double x) const;
    double dl_to_ul(double x) const;

    IsrBreakdown breakdown(double x) const;

    /// d(x) = eta (alpha_d D_dl + alpha_u D_ul) F + y0 x^{2b}
    double d(double x) const;
    /// u(x) = [eta (alpha_u A1 + alpha_d A2) F + y0'] x^{2b(1-k)}
    double u(double x) const;

    double sinr_dl(double x) const;
    double sinr_ul(double x) const;

    double inv_u(double y) const;
    double inv_d(double y, InverseMethod method = InverseMethod::bisection) const;

    /// Leading coefficients of d(x) = E0 x^{2b} (1 + c1 x^2 + ...).
    double series_e0() const noexcept { return e0_; }
    double series_c1() const noexcept { return e1_ / e0_; }

    /// Probability that a uniform user in the serving disk has SINR > gamma.
    double coverage(double gamma_db,
                    Direction direction,
                    InverseMethod method = InverseMethod::bisection) const;

    CoverageCurve coverage_curve(std::vector<double> const& gamma_grid_db,
                                 Direction direction,
                                 InverseMethod method = InverseMethod::bisection) const;

private:
    double series_dl(double x) const;
    double series_ul(double x) const;

    MacroNetwork net_;
    PropagationParams prop_;
    TddMix mix_;
    SeriesControl ctrl_;
    double b_;
    double q_;
    double shadow_;
    SinrParams sinr_;
    double p_star_over_p_;
    double a1_;
    double a2_;
    double x_clamp_;
    double ul_dl_clamp_value_;
    double e0_;
    double e1_;
    std::vector<double> dl_coeff_;
    std::vector<double> log_beta_;
};

IsrBreakdown isr_total(MobilePolar const& m,
                       MacroNetwork const& net,
                       PropagationParams const& prop,
                       TddMix const& mix,
                       std::optional<specfun::ShadowingSpec> const& shadowing = std::nullopt);

}  // namespace tddgeom::macro

#endif  // TDDGEOM_MACRO_ANALYTIC_HPP
