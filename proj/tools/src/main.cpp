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

#include <CLI/CLI.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "tddgeom/errors.hpp"
#include "tddgeom_app/config.hpp"
#include "tddgeom_app/recipes.hpp"
#include "tddgeom_app/runner.hpp"
#include "tddgeom_app/validation.hpp"

namespace {

enum ExitCode
{
    kOk = 0,
    kOther = 1,
    kConfig = 2,
    kNonConvergence = 3,
    kValidation = 4
};

using tddgeom::app::RunOptions;

struct CommonFlags
{
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> draws;
    std::optional<unsigned> workers;
    bool gnuplot = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--out", out_dir, "Output directory (default: TDDGEOM_OUT_DIR or .)");
        cmd->add_option("--seed", seed, "Override the Monte Carlo seed");
        cmd->add_option("--draws", draws, "Override the number of Monte Carlo draws")->check(CLI::PositiveNumber);
        cmd->add_option("--workers", workers, "Worker threads (0: hardware concurrency)");
        cmd->add_flag("--gnuplot", gnuplot, "Also write a gnuplot script per CSV");
    }

    RunOptions options() const
    {
        RunOptions o;
        if (!out_dir.empty())
            o.out_dir = out_dir;
        o.seed = seed;
        o.n_draws = draws;
        o.workers = workers;
        if (gnuplot)
            o.gnuplot = true;
        return o;
    }
};

void report(tddgeom::app::RunResult const& r)
{
    std::cout << "wrote " << r.csv.string() << " (" << r.table.rows.size() << " rows, " << r.wall_seconds
              << " s)\n";
}

int run_guarded(std::function<int()> const& body)
{
    try
    {
        return body();
    }
    catch (tddgeom::ConfigError const& e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    }
    catch (tddgeom::TruncationError const& e)
    {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kNonConvergence;
    }
    catch (tddgeom::IntegrationError const& e)
    {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kNonConvergence;
    }
    catch (std::exception const& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tddgeom: D-TDD interference, coverage and spectral efficiency for hexagonal macro "
                 "and Poisson small-cell networks"};
    app.set_version_flag("--version", tddgeom::app::version_string());
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string config_path;
    bool dump_only = false;
    auto* run_cmd = app.add_subcommand("run", "Run one experiment from a JSON config file");
    run_cmd->add_option("config", config_path, "Config file")->required();
    run_cmd->add_flag("--dump", dump_only, "Print the normalized config and exit");
    run_flags.attach(run_cmd);

    CommonFlags recipe_flags;
    std::string recipe_name;
    bool list = false;
    bool recipe_dump = false;
    auto* recipe_cmd = app.add_subcommand("recipe", "Run a built-in figure recipe");
    recipe_cmd->add_option("name", recipe_name, "Recipe name");
    recipe_cmd->add_flag("--list", list, "List recipes");
    recipe_cmd->add_flag("--dump", recipe_dump, "Print the configs of the recipe and exit");
    recipe_flags.attach(recipe_cmd);

    bool quick = false;
    std::string fault = "none";
    unsigned validate_workers = 0;
    auto* validate_cmd = app.add_subcommand("validate", "Run the oracle cross-check suite");
    validate_cmd->add_flag("--quick", quick, "Smaller Monte Carlo sizes and lattices");
    validate_cmd->add_option("--inject-fault", fault, "Deliberate defect: none | beta-sign")
        ->check(CLI::IsMember({"none", "beta-sign"}));
    validate_cmd->add_option("--workers", validate_workers, "Worker threads (0: hardware concurrency)");
    std::string only;
    validate_cmd->add_option("--only", only, "Run only checks whose name contains this text");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    if (*run_cmd)
    {
        return run_guarded([&] {
            auto const cfg = tddgeom::app::load_config(config_path);
            if (dump_only)
            {
                std::cout << tddgeom::app::dump_config(cfg).dump(2) << "\n";
                return kOk;
            }
            report(tddgeom::app::run(cfg, run_flags.options()));
            return kOk;
        });
    }

    if (*recipe_cmd)
    {
        return run_guarded([&] {
            if (list || recipe_name.empty())
            {
                for (auto const& name : tddgeom::app::recipe_names())
                    std::cout << name << "\t" << tddgeom::app::make_recipe(name).description << "\n";
                return kOk;
            }
            auto const recipe = tddgeom::app::make_recipe(recipe_name);
            if (recipe_dump)
            {
                nlohmann::json all = nlohmann::json::array();
                for (auto const& cfg : recipe.runs)
                    all.push_back(tddgeom::app::dump_config(cfg));
                std::cout << all.dump(2) << "\n";
                return kOk;
            }
            for (auto const& cfg : recipe.runs)
                report(tddgeom::app::run(cfg, recipe_flags.options()));
            return kOk;
        });
    }

    return run_guarded([&] {
        tddgeom::app::ValidateOptions opts;
        opts.quick = quick;
        opts.fault = fault == "beta-sign" ? tddgeom::app::Fault::beta_sign : tddgeom::app::Fault::none;
        opts.workers = validate_workers;
        opts.filter = only;
        auto const results = tddgeom::app::run_validation(
            opts, [](auto const& r) { std::cout << tddgeom::app::format_check(r) << std::endl; });
        if (results.empty())
            throw tddgeom::ConfigError({"--only: no check name contains '" + only + "'"});
        bool const ok = tddgeom::app::all_passed(results);
        std::cout << (ok ? "validation passed" : "validation FAILED") << "\n";
        return ok ? kOk : kValidation;
    });
}
