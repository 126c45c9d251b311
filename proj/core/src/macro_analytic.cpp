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

#include "tddgeom/macro_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tddgeom/errors.hpp"
#include "tddgeom/units.hpp"

namespace tddgeom::macro {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b)
{
    if (a == kNegInf)
        return b;
    if (b == kNegInf)
        return a;
    double const hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Lazily extended tables of log Gamma(b+m), log j! and log omega(b+m).
class Tables
{
public:
    Tables(double b, SeriesControl const& ctrl) : b_(b), ctrl_(ctrl) {}

    double log_gamma_b(int m)
    {
        while (static_cast<int>(lgb_.size()) <= m)
            lgb_.push_back(specfun::log_gamma(b_ + static_cast<double>(lgb_.size())));
        return lgb_[static_cast<std::size_t>(m)];
    }

    double log_fact(int j)
    {
        while (static_cast<int>(lf_.size()) <= j)
            lf_.push_back(specfun::log_gamma(static_cast<double>(lf_.size()) + 1.0));
        return lf_[static_cast<std::size_t>(j)];
    }

    double log_omega(int m)
    {
        while (static_cast<int>(lw_.size()) <= m)
            lw_.push_back(
                std::log(specfun::omega(b_ + static_cast<double>(lw_.size()), ctrl_)));
        return lw_[static_cast<std::size_t>(m)];
    }

private:
    double b_;
    SeriesControl ctrl_;
    std::vector<double> lgb_;
    std::vector<double> lf_;
    std::vector<double> lw_;
};

void require_b(double b, char const* who)
{
    if (!(b > 1.0) || !std::isfinite(b))
        throw DomainError(std::string(who) + ": requires b > 1");
}

void require_k(double k, char const* who)
{
    if (!(k >= 0.0 && k <= 1.0))
        throw DomainError(std::string(who) + ": requires k in [0, 1]");
}

void require_q(double q, char const* who)
{
    if (!(q > 0.0) || q > MacroModel::x_max() * (1.0 + 1e-12))
        throw DomainError(std::string(who) + ": requires 0 < R/delta <= 1/sqrt(3)");
}

// log of 6 Gamma(b+h)^2 omega(b+h) / (Gamma(b)^2 h!^2)
double log_dl_coeff(int h, Tables& t)
{
    return std::log(6.0) + 2.0 * (t.log_gamma_b(h) - t.log_gamma_b(0) - t.log_fact(h)) +
           t.log_omega(h);
}

double log_beta_impl(int h, double b, double k, double q, SeriesControl const& ctrl, Tables& t)
{
    double const log_q2 = 2.0 * std::log(q);
    double const bk1 = b * k + 1.0;
    double total = kNegInf;
    for (int n = 0; n <= h; ++n)
    {
        LogSeriesSum inner(ctrl, "beta_h inner series");
        double const fixed = -2.0 * t.log_gamma_b(0) - 2.0 * t.log_fact(n) - t.log_fact(h - n);
        for (int i = 0;; ++i)
        {
            int const m = h + n + i;
            double const log_term = fixed + 2.0 * t.log_gamma_b(m) + t.log_omega(m) -
                                    t.log_fact(i) - t.log_fact(h + n + i) +
                                    (n + i) * log_q2 - std::log(n + i + bk1);
            if (inner.add_log(log_term))
                break;
        }
        total = log_add(total, inner.log_value());
    }
    return total;
}

double dl_series(double x, std::vector<double> const* coeff, Tables* t, SeriesControl const& ctrl)
{
    if (x == 0.0)
        return 0.0;
    double const log_x2 = 2.0 * std::log(x);
    SeriesSum sum(ctrl, "DL-to-DL series");
    for (int h = 0;; ++h)
    {
        double log_c;
        if (coeff)
        {
            if (static_cast<std::size_t>(h) >= coeff->size())
                throw TruncationError("DL-to-DL series (coefficient table exhausted)",
                                      sum.value(), sum.terms());
            log_c = (*coeff)[static_cast<std::size_t>(h)];
        }
        else
        {
            log_c = log_dl_coeff(h, *t);
        }
        if (sum.add(std::exp(log_c + h * log_x2)))
            break;
    }
    return sum.value();
}

}  // namespace

SinrParams SinrParams::from(MacroNetwork const& net, PropagationParams const& prop)
{
    SinrParams p;
    double const noise = prop.noise();
    p.y0 = noise * std::pow(net.delta, prop.two_b) / prop.p_eff();
    p.y0_prime = noise * std::pow(net.delta, prop.two_b * (1.0 - prop.k)) / prop.p_star_eff();
    p.eta = net.load_eta;
    return p;
}

void SinrParams::validate() const
{
    if (!(y0 >= 0.0) || !(y0_prime >= 0.0))
        throw DomainError("SinrParams: y0 and y0_prime must be >= 0");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw DomainError("SinrParams: eta must lie in [0, 1]");
}

double isr_dl_dl(double x, double b, SeriesControl const& ctrl)
{
    require_b(b, "isr_dl_dl");
    if (!(x >= 0.0) || x > MacroModel::x_max() * (1.0 + 1e-12))
        throw DomainError("isr_dl_dl: requires 0 <= x <= 1/sqrt(3)");
    ctrl.validate();
    if (x == 0.0)
        return 0.0;
    Tables t(b, ctrl);
    return std::pow(x, 2.0 * b) * dl_series(x, nullptr, &t, ctrl);
}

double log_beta_h(int h, double b, double k, double r_over_delta, SeriesControl const& ctrl)
{
    if (h < 0)
        throw DomainError("beta_h: requires h >= 0");
    require_b(b, "beta_h");
    require_k(k, "beta_h");
    require_q(r_over_delta, "beta_h");
    Tables t(b, ctrl);
    return log_beta_impl(h, b, k, r_over_delta, ctrl, t);
}

double beta_h(int h, double b, double k, double r_over_delta, SeriesControl const& ctrl)
{
    return std::exp(log_beta_h(h, b, k, r_over_delta, ctrl));
}

double isr_ul_dl(double x,
                 double b,
                 double k,
                 double r_over_delta,
                 double p_star_over_p,
                 double delta,
                 SeriesControl const& ctrl)
{
    require_b(b, "isr_ul_dl");
    require_k(k, "isr_ul_dl");
    require_q(r_over_delta, "isr_ul_dl");
    if (!(x >= 0.0) || x > MacroModel::x_max() * (1.0 + 1e-12))
        throw DomainError("isr_ul_dl: requires 0 <= x <= 1/sqrt(3)");
    if (!(x + r_over_delta < 1.0))
        throw DomainError("isr_ul_dl: series diverges for x + R/delta >= 1");
    if (!(p_star_over_p >= 0.0) || !(delta > 0.0))
        throw DomainError("isr_ul_dl: requires P*/P >= 0 and delta > 0");
    if (x == 0.0 || p_star_over_p == 0.0)
        return 0.0;

    Tables t(b, ctrl);
    double const log_x2 = 2.0 * std::log(x);
    LogSeriesSum sum(ctrl, "UL-to-DL series");
    for (int h = 0;; ++h)
    {
        if (sum.add_log(log_beta_impl(h, b, k, r_over_delta, ctrl, t) + h * log_x2))
            break;
    }
    double const radius_km = r_over_delta * delta;
    return p_star_over_p * 6.0 * std::pow(x, 2.0 * b) * std::pow(radius_km, 2.0 * b * k) *
           std::exp(sum.log_value());
}

double a1(double b, double k, double r_over_delta, SeriesControl const& ctrl)
{
    require_b(b, "a1");
    require_k(k, "a1");
    require_q(r_over_delta, "a1");
    Tables t(b, ctrl);
    double const log_q2 = 2.0 * std::log(r_over_delta);
    SeriesSum sum(ctrl, "A1 series");
    for (int h = 0;; ++h)
    {
        double const log_term = log_dl_coeff(h, t) + h * log_q2 - std::log(b * k + h + 1.0);
        if (sum.add(std::exp(log_term)))
            break;
    }
    return std::pow(r_over_delta, 2.0 * b * k) * sum.value();
}

double a2(double b, double k, double p_over_pstar, double delta, SeriesControl const& ctrl)
{
    require_b(b, "a2");
    require_k(k, "a2");
    if (!(delta > 0.0))
        throw DomainError("a2: requires delta > 0");
    return 6.0 * p_over_pstar * specfun::omega(b, ctrl) * std::pow(delta, -2.0 * b * k);
}

double MacroModel::x_max() noexcept
{
    return 1.0 / std::numbers::sqrt3;
}

MacroModel::MacroModel(MacroNetwork const& net,
                       PropagationParams const& prop,
                       TddMix const& mix,
                       MacroModelOptions const& opts)
    : net_(net), prop_(prop), mix_(mix), ctrl_(opts.series)
{
    net_.validate();
    prop_.validate();
    mix_.validate();
    ctrl_.validate();

    b_ = prop_.b();
    q_ = net_.r_over_delta();
    shadow_ = opts.shadowing ? specfun::shadowing_mean_factor(*opts.shadowing) : 1.0;
    sinr_ = opts.sinr_override ? *opts.sinr_override : SinrParams::from(net_, prop_);
    sinr_.validate();
    p_star_over_p_ = prop_.p_star_eff() / prop_.p_eff();
    a1_ = macro::a1(b_, prop_.k, q_, ctrl_);
    a2_ = macro::a2(b_, prop_.k, 1.0 / p_star_over_p_, net_.delta, ctrl_);

    Tables t(b_, ctrl_);

    // DL-to-DL coefficients, enough for convergence at x_max.
    {
        double const log_x2 = 2.0 * std::log(x_max());
        SeriesSum sum(ctrl_, "DL-to-DL coefficient table");
        for (int h = 0;; ++h)
        {
            dl_coeff_.push_back(log_dl_coeff(h, t));
            if (sum.add(std::exp(dl_coeff_.back() + h * log_x2)))
                break;
        }
    }

    // beta_h, enough for convergence at the clamp point.
    x_clamp_ = std::min(x_max(), 0.95 * (1.0 - q_));
    {
        double const log_x2 = 2.0 * std::log(x_clamp_);
        LogSeriesSum sum(ctrl_, "UL-to-DL coefficient table");
        for (int h = 0;; ++h)
        {
            log_beta_.push_back(log_beta_impl(h, b_, prop_.k, q_, ctrl_, t));
            if (sum.add_log(log_beta_.back() + h * log_x2))
                break;
        }
    }
    ul_dl_clamp_value_ = series_ul(x_clamp_);

    double const ul_scale =
        6.0 * p_star_over_p_ * std::pow(q_ * net_.delta, 2.0 * b_ * prop_.k);
    double const eta_f = sinr_.eta * shadow_;
    e0_ = eta_f * (mix_.alpha_d * std::exp(dl_coeff_[0]) +
                   mix_.alpha_u() * ul_scale * std::exp(log_beta_[0])) +
          sinr_.y0;
    double const beta1 = log_beta_.size() > 1 ? std::exp(log_beta_[1])
                                              : std::exp(log_beta_impl(1, b_, prop_.k, q_, ctrl_, t));
    double const dl1 = dl_coeff_.size() > 1 ? std::exp(dl_coeff_[1]) : std::exp(log_dl_coeff(1, t));
    e1_ = eta_f * (mix_.alpha_d * dl1 + mix_.alpha_u() * ul_scale * beta1);
}

double MacroModel::series_dl(double x) const
{
    if (x == 0.0)
        return 0.0;
    return std::pow(x, 2.0 * b_) * dl_series(x, &dl_coeff_, nullptr, ctrl_);
}

double MacroModel::series_ul(double x) const
{
    if (x == 0.0 || p_star_over_p_ == 0.0)
        return 0.0;
    double const log_x2 = 2.0 * std::log(x);
    LogSeriesSum sum(ctrl_, "UL-to-DL series");
    for (std::size_t h = 0;; ++h)
    {
        if (h >= log_beta_.size())
            throw TruncationError("UL-to-DL series (coefficient table exhausted)",
                                  std::exp(sum.log_value()), sum.terms());
        if (sum.add_log(log_beta_[h] + static_cast<double>(h) * log_x2))
            break;
    }
    return 6.0 * p_star_over_p_ * std::pow(x, 2.0 * b_) *
           std::pow(q_ * net_.delta, 2.0 * b_ * prop_.k) * std::exp(sum.log_value());
}

namespace {

void require_x(double x, char const* who)
{
    if (!(x >= 0.0) || x > MacroModel::x_max() * (1.0 + 1e-12))
        throw DomainError(std::string(who) + ": requires 0 <= x <= 1/sqrt(3)");
}

}  // namespace

double MacroModel::dl_to_dl(double x) const
{
    require_x(x, "dl_to_dl");
    return shadow_ * series_dl(x);
}

double MacroModel::ul_to_dl(double x) const
{
    require_x(x, "ul_to_dl");
    if (x <= x_clamp_)
        return shadow_ * series_ul(x);
    return shadow_ * ul_dl_clamp_value_ * std::pow(x / x_clamp_, 2.0 * b_);
}

double MacroModel::ul_to_ul(double x) const
{
    require_x(x, "ul_to_ul");
    return shadow_ * a1_ * std::pow(x, 2.0 * b_ * (1.0 - prop_.k));
}

double MacroModel::dl_to_ul(double x) const
{
    require_x(x, "dl_to_ul");
    return shadow_ * a2_ * std::pow(x, 2.0 * b_ * (1.0 - prop_.k));
}

IsrBreakdown MacroModel::breakdown(double x) const
{
    IsrBreakdown out;
    out.dl_to_dl = dl_to_dl(x);
    out.ul_to_dl = ul_to_dl(x);
    out.ul_to_ul = ul_to_ul(x);
    out.dl_to_ul = dl_to_ul(x);
    out.total_dl = mix_.alpha_d * out.dl_to_dl + mix_.alpha_u() * out.ul_to_dl;
    out.total_ul = mix_.alpha_u() * out.ul_to_ul + mix_.alpha_d * out.dl_to_ul;
    return out;
}

double MacroModel::d(double x) const
{
    require_x(x, "d");
    double isr = 0.0;
    if (mix_.alpha_d > 0.0)
        isr += mix_.alpha_d * dl_to_dl(x);
    if (mix_.alpha_u() > 0.0)
        isr += mix_.alpha_u() * ul_to_dl(x);
    return sinr_.eta * isr + sinr_.y0 * std::pow(x, 2.0 * b_);
}

double MacroModel::u(double x) const
{
    require_x(x, "u");
    double const coeff =
        sinr_.eta * shadow_ * (mix_.alpha_u() * a1_ + mix_.alpha_d * a2_) + sinr_.y0_prime;
    return coeff * std::pow(x, 2.0 * b_ * (1.0 - prop_.k));
}

double MacroModel::sinr_dl(double x) const
{
    double const dv = d(x);
    if (!(dv > 0.0))
        throw DomainError("sinr_dl: SINR is unbounded (no interference and no noise)");
    return 1.0 / dv;
}

double MacroModel::sinr_ul(double x) const
{
    double const uv = u(x);
    if (!(uv > 0.0))
        throw DomainError("sinr_ul: SINR is unbounded (no interference and no noise)");
    return 1.0 / uv;
}

double MacroModel::inv_u(double y) const
{
    if (!(y > 0.0))
        throw DomainError("inv_u: requires y > 0");
    if (prop_.k == 1.0)
        throw DomainError("inv_u: u does not depend on x when k = 1");
    double const coeff =
        sinr_.eta * shadow_ * (mix_.alpha_u() * a1_ + mix_.alpha_d * a2_) + sinr_.y0_prime;
    if (!(coeff > 0.0))
        throw DomainError("inv_u: u vanishes identically");
    return std::pow(y / coeff, 1.0 / (2.0 * b_ * (1.0 - prop_.k)));
}

double MacroModel::inv_d(double y, InverseMethod method) const
{
    if (!(y > 0.0))
        throw DomainError("inv_d: requires y > 0");
    double const top = d(x_max());
    if (y > top)
        throw DomainError("inv_d: y exceeds d(1/sqrt(3))");

    if (method == InverseMethod::series)
    {
        double const v = std::pow(y / e0_, 1.0 / (2.0 * b_));
        double const c1 = series_c1();
        return v / std::sqrt(0.5 + std::sqrt(0.25 + c1 * v * v / b_));
    }

    double lo = 0.0;
    double hi = x_max();
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * hi; ++iter)
    {
        double const mid = 0.5 * (lo + hi);
        if (d(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double MacroModel::coverage(double gamma_db, Direction direction, InverseMethod method) const
{
    double const gamma = db_to_linear(gamma_db);
    double const y = 1.0 / gamma;
    double x_gamma;
    if (direction == Direction::dl)
    {
        if (y >= d(q_))
            return 1.0;
        x_gamma = inv_d(y, method);
    }
    else
    {
        if (prop_.k == 1.0)
            return y > u(q_) ? 1.0 : 0.0;
        x_gamma = inv_u(y);
    }
    double const ratio = std::min(x_gamma, q_) / q_;
    return ratio * ratio;
}

CoverageCurve MacroModel::coverage_curve(std::vector<double> const& gamma_grid_db,
                                         Direction direction,
                                         InverseMethod method) const
{
    validate_gamma_grid(gamma_grid_db);
    CoverageCurve curve;
    curve.gamma_db = gamma_grid_db;
    for (double g : gamma_grid_db)
    {
        curve.value.push_back(coverage(g, direction, method));
        curve.ci_halfwidth.push_back(0.0);
    }
    return curve;
}

IsrBreakdown isr_total(MobilePolar const& m,
                       MacroNetwork const& net,
                       PropagationParams const& prop,
                       TddMix const& mix,
                       std::optional<specfun::ShadowingSpec> const& shadowing)
{
    MacroModelOptions opts;
    opts.shadowing = shadowing;
    MacroModel const model(net, prop, mix, opts);
    return model.breakdown(m.r / net.delta);
}

}  // namespace tddgeom::macro
