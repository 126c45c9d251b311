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

#ifndef TDDGEOM_APP_CONFIG_HPP
#define TDDGEOM_APP_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tddgeom/coverage.hpp"
#include "tddgeom/hexgrid.hpp"
#include "tddgeom/macro_analytic.hpp"
#include "tddgeom/model.hpp"
#include "tddgeom/ppp_analytic.hpp"
#include "tddgeom/series.hpp"

namespace tddgeom::app {

enum class Geometry
{
    macro,
    ppp
};

enum class Mode
{
    analytic,
    mc,
    both
};

enum class Experiment
{
    coverage,
    isr,
    ase
};

/// Propagation factor preset: outdoor a = 130 dB, indoor a = 160 dB.
enum class Environment
{
    outdoor,
    indoor,
    custom
};

struct ExperimentConfig
{
    std::string name = "experiment";
    Geometry geometry = Geometry::macro;
    Experiment experiment = Experiment::coverage;
    Direction direction = Direction::dl;
    Mode mode = Mode::analytic;
    Environment environment = Environment::outdoor;

    TddMix mix{};
    /// Macro tier link budget; two_b, k, a_db and noise are shared with
    /// the small-cell tier.
    PropagationParams prop{};
    MacroNetwork network{};
    double shadowing_sigma_db = 0.0;
    macro::InverseMethod inverse = macro::InverseMethod::bisection;
    hexgrid::InterfererModel interferers = hexgrid::InterfererModel::bernoulli;

    double lambda = 10.0;
    /// Unset: 10/sqrt(lambda) for every density.
    std::optional<double> window_radius;
    double p_small_dbm = 26.0;
    double p_small_star_dbm = 20.0;
    double small_antenna_gain_db = 0.0;
    Fading fading = Fading::rayleigh;
    Association association = Association::displaced;
    bool far_field_correction = true;

    std::vector<double> gamma_grid_db;
    std::vector<double> x_grid;
    std::vector<double> lambda_grid;

    std::size_t n_draws = 20000;
    std::uint64_t seed = 1;
    unsigned workers = 0;

    SeriesControl series{};
    ppp::AnalyticOptions analytic{};

    /// Empty: the default output directory.
    std::string output_dir;
    bool gnuplot = false;

    /// Small-cell scenario at density `lambda_value`.
    SmallCellScenario scenario(double lambda_value) const;
    SmallCellScenario scenario() const { return scenario(lambda); }
    macro::MacroModelOptions macro_options() const;
};

/// Parses a config tree. Omitted fields take their defaults; unknown keys
/// and invalid values are collected and thrown together as ConfigError.
ExperimentConfig parse_config(nlohmann::json const& tree);
/// Reads and parses a UTF-8 JSON file. An empty file yields the defaults.
ExperimentConfig load_config(std::filesystem::path const& path);
/// Complete tree of a config, every field explicit.
nlohmann::json dump_config(ExperimentConfig const& cfg);
/// dump_config(parse_config(tree)).
nlohmann::json normalize_config(nlohmann::json const& tree);

std::string to_string(Geometry g);
std::string to_string(Mode m);
std::string to_string(Experiment e);
std::string to_string(Environment e);

/// Default gamma grid: -30 dB to 30 dB in 2 dB steps.
std::vector<double> default_gamma_grid();
/// Default normalised-distance grid for ISR sweeps.
std::vector<double> default_x_grid();
/// Default density grid (cells per km^2) for ASE sweeps.
std::vector<double> default_lambda_grid();

}  // namespace tddgeom::app

#endif  // TDDGEOM_APP_CONFIG_HPP
