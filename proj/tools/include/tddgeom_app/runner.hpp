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

#ifndef TDDGEOM_APP_RUNNER_HPP
#define TDDGEOM_APP_RUNNER_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tddgeom_app/config.hpp"

namespace tddgeom::app {

/// Numeric result table with named columns.
struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Column index by name; throws std::out_of_range when absent.
    std::size_t column(std::string const& name) const;
    std::vector<double> values(std::string const& name) const;
};

/// Runs the experiment described by `cfg` and returns its table.
Table compute(ExperimentConfig const& cfg);

/// CSV text: header line then one line per row, dot decimal separator.
std::string format_csv(Table const& table);
/// Inverse of format_csv; throws ConfigError on malformed input.
Table parse_csv(std::string const& text);
Table read_csv(std::filesystem::path const& path);

struct RunOptions
{
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n_draws;
    std::optional<unsigned> workers;
    std::optional<bool> gnuplot;
};

struct RunResult
{
    Table table;
    std::filesystem::path csv;
    std::filesystem::path meta;
    std::optional<std::filesystem::path> gnuplot;
    double wall_seconds = 0.0;
};

/// Config after the command-line overrides of `opts`.
ExperimentConfig apply_overrides(ExperimentConfig cfg, RunOptions const& opts);

/// Computes the table and writes <name>.csv, <name>.meta.json and, when
/// enabled, <name>.gp into the output directory.
RunResult run(ExperimentConfig const& cfg, RunOptions const& opts = {});

/// Output directory precedence: explicit option, config, TDDGEOM_OUT_DIR,
/// current directory.
std::filesystem::path output_directory(ExperimentConfig const& cfg, RunOptions const& opts);

/// Library version with the git description of the build tree.
std::string version_string();

}  // namespace tddgeom::app

#endif  // TDDGEOM_APP_RUNNER_HPP
