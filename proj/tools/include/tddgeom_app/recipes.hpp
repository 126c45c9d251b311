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

#ifndef TDDGEOM_APP_RECIPES_HPP
#define TDDGEOM_APP_RECIPES_HPP

#include <string>
#include <vector>

#include "tddgeom_app/config.hpp"

namespace tddgeom::app {

/// Named set of experiments reproducing one published figure.
struct Recipe
{
    std::string name;
    std::string description;
    std::vector<ExperimentConfig> runs;
};

std::vector<std::string> recipe_names();
/// Throws ConfigError for an unknown name.
Recipe make_recipe(std::string const& name);

}  // namespace tddgeom::app

#endif  // TDDGEOM_APP_RECIPES_HPP
