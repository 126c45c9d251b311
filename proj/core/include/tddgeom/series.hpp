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

#ifndef TDDGEOM_SERIES_HPP
#define TDDGEOM_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "tddgeom/errors.hpp"

namespace tddgeom {

/// Truncation rule shared by every infinite series in the library.
struct SeriesControl
{
    double rel_tol = 1e-10;
    std::size_t max_terms = 2000;

    void validate() const
    {
        if (!(rel_tol > 0.0))
            throw DomainError("SeriesControl: rel_tol must be positive");
        if (max_terms < 1)
            throw DomainError("SeriesControl: max_terms must be at least 1");
    }
};

/// Running sum of a series that stops once three consecutive terms are
/// below rel_tol times the partial sum.  Hitting max_terms first throws.
class SeriesSum
{
public:
    SeriesSum(SeriesControl const& ctrl, std::string what)
        : ctrl_(ctrl), what_(std::move(what))
    {
        ctrl_.validate();
    }

    /// Adds a term; returns true once the series has converged.
    bool add(double term)
    {
        sum_ += term;
        ++terms_;
        if (std::abs(term) <= ctrl_.rel_tol * std::abs(sum_))
            ++small_run_;
        else
            small_run_ = 0;
        if (small_run_ >= kRun)
            return true;
        if (terms_ >= ctrl_.max_terms)
            throw TruncationError(what_, sum_, terms_);
        return false;
    }

    double value() const noexcept { return sum_; }
    std::size_t terms() const noexcept { return terms_; }

private:
    static constexpr int kRun = 3;

    SeriesControl ctrl_;
    std::string what_;
    double sum_ = 0.0;
    std::size_t terms_ = 0;
    int small_run_ = 0;
};

/// Same rule for a series of positive terms supplied as logarithms.  The sum
/// is kept as exp(scale) * acc so terms far outside double range are fine.
class LogSeriesSum
{
public:
    LogSeriesSum(SeriesControl const& ctrl, std::string what)
        : ctrl_(ctrl), what_(std::move(what)), log_tol_(std::log(ctrl.rel_tol))
    {
        ctrl_.validate();
    }

    bool add_log(double log_term)
    {
        ++terms_;
        if (log_term == -std::numeric_limits<double>::infinity())
        {
            // exact zero term
        }
        else if (acc_ == 0.0)
        {
            scale_ = log_term;
            acc_ = 1.0;
        }
        else if (log_term > scale_)
        {
            acc_ = acc_ * std::exp(scale_ - log_term) + 1.0;
            scale_ = log_term;
        }
        else
        {
            acc_ += std::exp(log_term - scale_);
        }

        if (acc_ == 0.0 || log_term <= log_tol_ + log_value())
            ++small_run_;
        else
            small_run_ = 0;
        if (small_run_ >= kRun)
            return true;
        if (terms_ >= ctrl_.max_terms)
            throw TruncationError(what_, std::exp(log_value()), terms_);
        return false;
    }

    double log_value() const noexcept
    {
        return acc_ == 0.0 ? -std::numeric_limits<double>::infinity()
                           : scale_ + std::log(acc_);
    }
    std::size_t terms() const noexcept { return terms_; }

private:
    static constexpr int kRun = 3;

    SeriesControl ctrl_;
    std::string what_;
    double log_tol_;
    double scale_ = 0.0;
    double acc_ = 0.0;
    std::size_t terms_ = 0;
    int small_run_ = 0;
};

}  // namespace tddgeom

#endif  // TDDGEOM_SERIES_HPP
