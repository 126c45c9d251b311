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

#ifndef TDDGEOM_ERRORS_HPP
#define TDDGEOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tddgeom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// A series did not meet its convergence rule within the term cap.
class TruncationError : public Error
{
public:
    TruncationError(std::string const& what, double partial_sum, std::size_t terms)
        : Error(what + " (series not converged after " + std::to_string(terms) +
                " terms, partial sum " + std::to_string(partial_sum) + ")"),
          partial_sum_(partial_sum),
          terms_(terms)
    {}

    double partial_sum() const noexcept { return partial_sum_; }
    std::size_t terms() const noexcept { return terms_; }

private:
    double partial_sum_;
    std::size_t terms_;
};

/// Adaptive quadrature could not reach the requested tolerance.
class IntegrationError : public Error
{
public:
    IntegrationError(std::string const& what, double estimate, double error_estimate)
        : Error(what + " (estimate " + std::to_string(estimate) + ", error estimate " +
                std::to_string(error_estimate) + ")"),
          estimate_(estimate),
          error_estimate_(error_estimate)
    {}

    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

/// Invalid or inconsistent configuration; carries one message per problem.
class ConfigError : public Error
{
public:
    explicit ConfigError(std::vector<std::string> issues)
        : Error(join(issues)), issues_(std::move(issues))
    {}

    std::vector<std::string> const& issues() const noexcept { return issues_; }

private:
    static std::string join(std::vector<std::string> const& issues)
    {
        std::string out = "invalid configuration";
        for (auto const& issue : issues)
        {
            out += "\n  - ";
            out += issue;
        }
        return out;
    }

    std::vector<std::string> issues_;
};

}  // namespace tddgeom

#endif  // TDDGEOM_ERRORS_HPP
