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

#ifndef TDDGEOM_APP_VALIDATION_HPP
#define TDDGEOM_APP_VALIDATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tddgeom::app {

/// Deliberate defects used to confirm that the checks can fail.
enum class Fault
{
    none,
    /// Negates beta_h before it enters the A1 identity check.
    beta_sign
};

struct ValidateOptions
{
    /// Smaller Monte Carlo sizes and lattices; tolerances unchanged.
    bool quick = false;
    Fault fault = Fault::none;
    unsigned workers = 0;
    std::uint64_t seed = 20260101;
    /// Runs only checks whose name contains this text (empty: all).
    std::string filter;
};

struct CheckResult
{
    std::string name;
    /// Achieved discrepancy and its bound, in the unit named by `metric`.
    double achieved = 0.0;
    double required = 0.0;
    std::string metric;
    bool passed = false;
    /// Informational checks are reported but never fail the suite.
    bool informational = false;
    double seconds = 0.0;
    std::string detail;
};

std::vector<CheckResult> run_validation(ValidateOptions const& opts,
                                        std::function<void(CheckResult const&)> const& on_result = {});

/// True when every non-informational check passed.
bool all_passed(std::vector<CheckResult> const& results);

/// One report line per check.
std::string format_check(CheckResult const& r);

}  // namespace tddgeom::app

#endif  // TDDGEOM_APP_VALIDATION_HPP
