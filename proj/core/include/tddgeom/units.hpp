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

#ifndef TDDGEOM_UNITS_HPP
#define TDDGEOM_UNITS_HPP

#include <cmath>

namespace tddgeom {

inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) noexcept { return 10.0 * std::log10(lin); }

/// dBm to milliwatts.
inline double dbm_to_mw(double dbm) noexcept { return db_to_linear(dbm); }

}  // namespace tddgeom

#endif  // TDDGEOM_UNITS_HPP
