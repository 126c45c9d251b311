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

#include "tddgeom_app/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "tddgeom/errors.hpp"

namespace tddgeom::app {
namespace {

using nlohmann::json;

constexpr double kOutdoorA = 130.0;
constexpr double kIndoorA = 160.0;

std::vector<double> range_grid(double start, double stop, double step)
{
    std::vector<double> grid;
    auto const n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i)
        grid.push_back(start + static_cast<double>(i) * step);
    return grid;
}

/// Collects itemised problems while walking the tree.
class Reader
{
public:
    std::vector<std::string> issues;

    void fail(std::string const& path, std::string const& message)
    {
        issues.push_back(path + ": " + message);
    }

    /// Returns the object at `key` (or null when absent) after checking
    /// its keys against `allowed`.
    json const* object(json const& parent,
                       std::string const& key,
                       std::string const& path,
                       std::initializer_list<char const*> allowed)
    {
        auto it = parent.find(key);
        if (it == parent.end() || it->is_null())
            return nullptr;
        if (!it->is_object())
        {
            fail(path, "must be an object");
            return nullptr;
        }
        check_keys(*it, path, allowed);
        return &*it;
    }

    void check_keys(json const& obj, std::string const& path, std::initializer_list<char const*> allowed)
    {
        for (auto const& item : obj.items())
        {
            bool const known = std::any_of(allowed.begin(), allowed.end(),
                                           [&](char const* k) { return item.key() == k; });
            if (!known)
                fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
        }
    }

    bool number(json const* obj, char const* key, std::string const& path, double& out)
    {
        if (!obj)
            return false;
        auto it = obj->find(key);
        if (it == obj->end() || it->is_null())
            return false;
        if (!it->is_number())
        {
            fail(path + "." + key, "must be a number");
            return false;
        }
        out = it->get<double>();
        if (!std::isfinite(out))
        {
            fail(path + "." + key, "must be finite");
            return false;
        }
        return true;
    }

    template <class Int>
    bool integer(json const* obj, char const* key, std::string const& path, Int& out, Int min_value)
    {
        if (!obj)
            return false;
        auto it = obj->find(key);
        if (it == obj->end() || it->is_null())
            return false;
        if (!it->is_number_integer())
        {
            fail(path + "." + key, "must be an integer");
            return false;
        }
        if (it->is_number_unsigned())
        {
            auto const v = it->get<std::uint64_t>();
            if (v > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
            {
                fail(path + "." + key, "out of range");
                return false;
            }
            if (static_cast<Int>(v) < min_value)
            {
                fail(path + "." + key, "must be at least " + std::to_string(min_value));
                return false;
            }
            out = static_cast<Int>(v);
            return true;
        }
        auto const v = it->get<std::int64_t>();
        if (v < static_cast<std::int64_t>(min_value))
        {
            fail(path + "." + key, "must be at least " + std::to_string(min_value));
            return false;
        }
        out = static_cast<Int>(v);
        return true;
    }

    bool boolean(json const* obj, char const* key, std::string const& path, bool& out)
    {
        if (!obj)
            return false;
        auto it = obj->find(key);
        if (it == obj->end() || it->is_null())
            return false;
        if (!it->is_boolean())
        {
            fail(path + "." + key, "must be true or false");
            return false;
        }
        out = it->get<bool>();
        return true;
    }

    bool string(json const* obj, char const* key, std::string const& path, std::string& out)
    {
        if (!obj)
            return false;
        auto it = obj->find(key);
        if (it == obj->end() || it->is_null())
            return false;
        if (!it->is_string())
        {
            fail(path + "." + key, "must be a string");
            return false;
        }
        out = it->get<std::string>();
        return true;
    }

    template <class Enum>
    void choice(json const* obj,
                char const* key,
                std::string const& path,
                Enum& out,
                std::initializer_list<std::pair<char const*, Enum>> options)
    {
        std::string text;
        if (!string(obj, key, path, text))
            return;
        std::string lowered = text;
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        std::string names;
        for (auto const& [name, value] : options)
        {
            if (lowered == name)
            {
                out = value;
                return;
            }
            names += names.empty() ? name : std::string(", ") + name;
        }
        fail(path + "." + key, "'" + text + "' is not one of " + names);
    }

    /// Array of numbers, or {start, stop, step}.
    bool grid(json const* obj, char const* key, std::string const& path, std::vector<double>& out)
    {
        if (!obj)
            return false;
        auto it = obj->find(key);
        if (it == obj->end() || it->is_null())
            return false;
        std::string const where = path + "." + key;
        if (it->is_array())
        {
            std::vector<double> values;
            for (auto const& v : *it)
            {
                if (!v.is_number())
                {
                    fail(where, "entries must be numbers");
                    return false;
                }
                values.push_back(v.get<double>());
            }
            out = std::move(values);
            return true;
        }
        if (it->is_object())
        {
            check_keys(*it, where, {"start", "stop", "step"});
            double start = 0.0, stop = 0.0, step = 0.0;
            bool ok = number(&*it, "start", where, start);
            ok = number(&*it, "stop", where, stop) && ok;
            ok = number(&*it, "step", where, step) && ok;
            if (!ok)
            {
                fail(where, "range needs numeric start, stop and step");
                return false;
            }
            if (!(step > 0.0) || stop < start)
            {
                fail(where, "range needs step > 0 and stop >= start");
                return false;
            }
            if ((stop - start) / step > 1e6)
            {
                fail(where, "range has more than 1e6 points");
                return false;
            }
            out = range_grid(start, stop, step);
            return true;
        }
        fail(where, "must be an array of numbers or {start, stop, step}");
        return false;
    }

    template <class F>
    void check(std::string const& path, F&& validate)
    {
        try
        {
            validate();
        }
        catch (ConfigError const& e)
        {
            for (auto const& issue : e.issues())
                fail(path, issue);
        }
        catch (Error const& e)
        {
            fail(path, e.what());
        }
    }
};

bool strictly_increasing(std::vector<double> const& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            return false;
    return true;
}

}  // namespace

std::vector<double> default_gamma_grid()
{
    return range_grid(-30.0, 30.0, 2.0);
}

std::vector<double> default_x_grid()
{
    return range_grid(0.02, 0.56, 0.02);
}

std::vector<double> default_lambda_grid()
{
    return {5.0, 10.0, 15.0, 20.0, 30.0, 40.0, 50.0};
}

std::string to_string(Geometry g)
{
    return g == Geometry::macro ? "macro" : "ppp";
}

std::string to_string(Mode m)
{
    switch (m)
    {
    case Mode::analytic: return "analytic";
    case Mode::mc: return "mc";
    case Mode::both: return "both";
    }
    return "analytic";
}

std::string to_string(Experiment e)
{
    switch (e)
    {
    case Experiment::coverage: return "coverage";
    case Experiment::isr: return "isr";
    case Experiment::ase: return "ase";
    }
    return "coverage";
}

std::string to_string(Environment e)
{
    switch (e)
    {
    case Environment::outdoor: return "outdoor";
    case Environment::indoor: return "indoor";
    case Environment::custom: return "custom";
    }
    return "outdoor";
}

SmallCellScenario ExperimentConfig::scenario(double lambda_value) const
{
    SmallCellScenario s;
    s.lambda = lambda_value;
    s.window_radius = window_radius.value_or(SmallCellScenario::default_window(lambda_value));
    s.p_small_dbm = p_small_dbm;
    s.p_small_star_dbm = p_small_star_dbm;
    s.prop.two_b = prop.two_b;
    s.prop.k = prop.k;
    s.prop.a_db = prop.a_db;
    s.prop.antenna_gain_db = small_antenna_gain_db;
    s.prop.p_dl_dbm = p_small_dbm;
    s.prop.p_star_dbm = p_small_star_dbm;
    s.prop.p_noise_dbm = prop.p_noise_dbm;
    s.mix = mix;
    s.fading = fading;
    s.association = association;
    return s;
}

macro::MacroModelOptions ExperimentConfig::macro_options() const
{
    macro::MacroModelOptions o;
    o.series = series;
    if (shadowing_sigma_db > 0.0)
        o.shadowing = specfun::ShadowingSpec{shadowing_sigma_db};
    return o;
}

ExperimentConfig parse_config(json const& tree)
{
    ExperimentConfig cfg;
    Reader rd;
    if (tree.is_null())
        return parse_config(json::object());
    if (!tree.is_object())
        throw ConfigError({"config root must be an object"});

    rd.check_keys(tree, "",
                  {"name", "geometry", "experiment", "direction", "mode", "environment", "tdd",
                   "propagation", "macro", "small_cell", "grids", "monte_carlo", "numerics",
                   "output"});

    rd.string(&tree, "name", "", cfg.name);
    if (cfg.name.empty() || cfg.name.find_first_of("/\\") != std::string::npos)
        rd.fail("name", "must be a nonempty file stem without path separators");
    rd.choice(&tree, "geometry", "", cfg.geometry,
              {{"macro", Geometry::macro}, {"ppp", Geometry::ppp}});
    rd.choice(&tree, "experiment", "", cfg.experiment,
              {{"coverage", Experiment::coverage}, {"isr", Experiment::isr}, {"ase", Experiment::ase}});
    rd.choice(&tree, "direction", "", cfg.direction,
              {{"dl", Direction::dl}, {"ul", Direction::ul}});
    rd.choice(&tree, "mode", "", cfg.mode,
              {{"analytic", Mode::analytic}, {"mc", Mode::mc}, {"both", Mode::both}});
    bool const has_env = tree.contains("environment") && !tree["environment"].is_null();
    rd.choice(&tree, "environment", "", cfg.environment,
              {{"outdoor", Environment::outdoor},
               {"indoor", Environment::indoor},
               {"custom", Environment::custom}});

    auto const* tdd = rd.object(tree, "tdd", "tdd", {"alpha_d"});
    rd.number(tdd, "alpha_d", "tdd", cfg.mix.alpha_d);

    auto const* prop = rd.object(tree, "propagation", "propagation", {"two_b", "k", "a_db", "p_noise_dbm"});
    rd.number(prop, "two_b", "propagation", cfg.prop.two_b);
    cfg.prop.k = cfg.geometry == Geometry::ppp ? 0.4 : 0.0;
    rd.number(prop, "k", "propagation", cfg.prop.k);
    double a_db = kOutdoorA;
    bool const has_a = rd.number(prop, "a_db", "propagation", a_db);
    if (has_env && cfg.environment != Environment::custom)
    {
        double const preset = cfg.environment == Environment::indoor ? kIndoorA : kOutdoorA;
        if (has_a && a_db != preset)
            rd.fail("propagation.a_db",
                    "conflicts with environment '" + to_string(cfg.environment) + "'");
        a_db = preset;
    }
    else if (!has_env)
    {
        cfg.environment = a_db == kIndoorA ? Environment::indoor
                          : a_db == kOutdoorA ? Environment::outdoor
                                              : Environment::custom;
    }
    cfg.prop.a_db = a_db;
    rd.number(prop, "p_noise_dbm", "propagation", cfg.prop.p_noise_dbm);

    auto const* mac = rd.object(tree, "macro", "macro",
                                {"delta_km", "cell_radius_km", "rings", "load_eta", "p_dbm",
                                 "p_star_dbm", "antenna_gain_db", "shadowing_sigma_db", "inverse",
                                 "interferers"});
    rd.number(mac, "delta_km", "macro", cfg.network.delta);
    cfg.network.cell_radius = cfg.network.delta / std::sqrt(3.0);
    rd.number(mac, "cell_radius_km", "macro", cfg.network.cell_radius);
    rd.integer(mac, "rings", "macro", cfg.network.rings, 1);
    rd.number(mac, "load_eta", "macro", cfg.network.load_eta);
    rd.number(mac, "p_dbm", "macro", cfg.prop.p_dl_dbm);
    rd.number(mac, "p_star_dbm", "macro", cfg.prop.p_star_dbm);
    rd.number(mac, "antenna_gain_db", "macro", cfg.prop.antenna_gain_db);
    rd.number(mac, "shadowing_sigma_db", "macro", cfg.shadowing_sigma_db);
    rd.choice(mac, "inverse", "macro", cfg.inverse,
              {{"bisection", macro::InverseMethod::bisection}, {"series", macro::InverseMethod::series}});
    rd.choice(mac, "interferers", "macro", cfg.interferers,
              {{"bernoulli", hexgrid::InterfererModel::bernoulli},
               {"mean_field", hexgrid::InterfererModel::mean_field}});

    auto const* sc = rd.object(tree, "small_cell", "small_cell",
                               {"lambda_per_km2", "window_radius_km", "p_dbm", "p_star_dbm",
                                "antenna_gain_db", "fading", "association", "far_field_correction"});
    rd.number(sc, "lambda_per_km2", "small_cell", cfg.lambda);
    double window = 0.0;
    if (rd.number(sc, "window_radius_km", "small_cell", window))
        cfg.window_radius = window;
    rd.number(sc, "p_dbm", "small_cell", cfg.p_small_dbm);
    rd.number(sc, "p_star_dbm", "small_cell", cfg.p_small_star_dbm);
    rd.number(sc, "antenna_gain_db", "small_cell", cfg.small_antenna_gain_db);
    rd.choice(sc, "fading", "small_cell", cfg.fading,
              {{"rayleigh", Fading::rayleigh}, {"none", Fading::none}});
    rd.choice(sc, "association", "small_cell", cfg.association,
              {{"displaced", Association::displaced}, {"nearest", Association::nearest}});
    rd.boolean(sc, "far_field_correction", "small_cell", cfg.far_field_correction);

    auto const* grids = rd.object(tree, "grids", "grids", {"gamma_db", "x", "lambda_per_km2"});
    if (!rd.grid(grids, "gamma_db", "grids", cfg.gamma_grid_db))
        cfg.gamma_grid_db = default_gamma_grid();
    if (!rd.grid(grids, "x", "grids", cfg.x_grid))
        cfg.x_grid = default_x_grid();
    if (!rd.grid(grids, "lambda_per_km2", "grids", cfg.lambda_grid))
        cfg.lambda_grid = default_lambda_grid();

    auto const* mc = rd.object(tree, "monte_carlo", "monte_carlo", {"n_draws", "seed", "workers"});
    rd.integer(mc, "n_draws", "monte_carlo", cfg.n_draws, std::size_t{1});
    rd.integer(mc, "seed", "monte_carlo", cfg.seed, std::uint64_t{0});
    rd.integer(mc, "workers", "monte_carlo", cfg.workers, 0u);

    auto const* num = rd.object(tree, "numerics", "numerics",
                                {"series_rel_tol", "series_max_terms", "inner_abs_tol",
                                 "outer_abs_tol", "max_intervals", "laplace_method", "ase_abs_tol"});
    rd.number(num, "series_rel_tol", "numerics", cfg.series.rel_tol);
    rd.integer(num, "series_max_terms", "numerics", cfg.series.max_terms, std::size_t{1});
    rd.number(num, "inner_abs_tol", "numerics", cfg.analytic.quad.inner_abs_tol);
    rd.number(num, "outer_abs_tol", "numerics", cfg.analytic.quad.outer_abs_tol);
    rd.integer(num, "max_intervals", "numerics", cfg.analytic.quad.max_intervals, std::size_t{1});
    rd.choice(num, "laplace_method", "numerics", cfg.analytic.method,
              {{"reduced", ppp::LaplaceMethod::reduced}, {"nested", ppp::LaplaceMethod::nested}});
    rd.number(num, "ase_abs_tol", "numerics", cfg.analytic.ase_abs_tol);

    auto const* out = rd.object(tree, "output", "output", {"dir", "gnuplot"});
    rd.string(out, "dir", "output", cfg.output_dir);
    rd.boolean(out, "gnuplot", "output", cfg.gnuplot);

    // Cross-field validation.
    rd.check("tdd", [&] { cfg.mix.validate(); });
    rd.check("propagation", [&] { cfg.prop.validate(); });
    rd.check("numerics", [&] { cfg.series.validate(); });
    rd.check("numerics", [&] { cfg.analytic.quad.validate(); });
    if (!(cfg.analytic.ase_abs_tol > 0.0))
        rd.fail("numerics.ase_abs_tol", "must be positive");
    if (!(cfg.shadowing_sigma_db >= 0.0))
        rd.fail("macro.shadowing_sigma_db", "must be nonnegative");

    if (cfg.geometry == Geometry::macro)
    {
        rd.check("macro", [&] { cfg.network.validate(); });
        if (cfg.experiment == Experiment::ase)
            rd.fail("experiment", "ase sweeps need geometry 'ppp'");
        if (cfg.experiment == Experiment::isr)
        {
            if (cfg.x_grid.empty() || !strictly_increasing(cfg.x_grid))
                rd.fail("grids.x", "must be nonempty and strictly increasing");
            double const x_top = cfg.network.r_over_delta();
            for (double x : cfg.x_grid)
                if (!(x > 0.0 && x <= x_top * (1.0 + 1e-12)))
                {
                    rd.fail("grids.x", "values must lie in (0, R/delta]");
                    break;
                }
        }
    }
    else
    {
        if (cfg.experiment == Experiment::isr)
            rd.fail("experiment", "isr sweeps need geometry 'macro'");
        if (cfg.experiment == Experiment::ase)
        {
            if (cfg.lambda_grid.empty() || !strictly_increasing(cfg.lambda_grid))
                rd.fail("grids.lambda_per_km2", "must be nonempty and strictly increasing");
            for (double l : cfg.lambda_grid)
                rd.check("grids.lambda_per_km2", [&] { cfg.scenario(l).validate(); });
        }
        else
        {
            rd.check("small_cell", [&] { cfg.scenario().validate(); });
        }
    }
    if (cfg.experiment == Experiment::coverage)
        rd.check("grids.gamma_db", [&] { validate_gamma_grid(cfg.gamma_grid_db); });

    if (!rd.issues.empty())
        throw ConfigError(rd.issues);
    return cfg;
}

ExperimentConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError({path.string() + ": cannot open file"});
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string const text = buffer.str();
    bool const blank = std::all_of(text.begin(), text.end(),
                                   [](unsigned char ch) { return std::isspace(ch) != 0; });
    if (blank)
        return parse_config(json::object());
    json tree;
    try
    {
        tree = json::parse(text);
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError({path.string() + ": " + e.what()});
    }
    return parse_config(tree);
}

json dump_config(ExperimentConfig const& cfg)
{
    json t;
    t["name"] = cfg.name;
    t["geometry"] = to_string(cfg.geometry);
    t["experiment"] = to_string(cfg.experiment);
    t["direction"] = std::string(to_string(cfg.direction));
    t["mode"] = to_string(cfg.mode);
    t["environment"] = to_string(cfg.environment);
    t["tdd"] = {{"alpha_d", cfg.mix.alpha_d}};
    t["propagation"] = {{"two_b", cfg.prop.two_b},
                        {"k", cfg.prop.k},
                        {"a_db", cfg.prop.a_db},
                        {"p_noise_dbm", cfg.prop.p_noise_dbm}};
    t["macro"] = {{"delta_km", cfg.network.delta},
                  {"cell_radius_km", cfg.network.cell_radius},
                  {"rings", cfg.network.rings},
                  {"load_eta", cfg.network.load_eta},
                  {"p_dbm", cfg.prop.p_dl_dbm},
                  {"p_star_dbm", cfg.prop.p_star_dbm},
                  {"antenna_gain_db", cfg.prop.antenna_gain_db},
                  {"shadowing_sigma_db", cfg.shadowing_sigma_db},
                  {"inverse", cfg.inverse == macro::InverseMethod::series ? "series" : "bisection"},
                  {"interferers", cfg.interferers == hexgrid::InterfererModel::mean_field
                                      ? "mean_field"
                                      : "bernoulli"}};
    t["small_cell"] = {{"lambda_per_km2", cfg.lambda},
                       {"window_radius_km", cfg.window_radius ? json(*cfg.window_radius) : json(nullptr)},
                       {"p_dbm", cfg.p_small_dbm},
                       {"p_star_dbm", cfg.p_small_star_dbm},
                       {"antenna_gain_db", cfg.small_antenna_gain_db},
                       {"fading", cfg.fading == Fading::none ? "none" : "rayleigh"},
                       {"association", cfg.association == Association::nearest ? "nearest" : "displaced"},
                       {"far_field_correction", cfg.far_field_correction}};
    t["grids"] = {{"gamma_db", cfg.gamma_grid_db}, {"x", cfg.x_grid}, {"lambda_per_km2", cfg.lambda_grid}};
    t["monte_carlo"] = {{"n_draws", cfg.n_draws}, {"seed", cfg.seed}, {"workers", cfg.workers}};
    t["numerics"] = {{"series_rel_tol", cfg.series.rel_tol},
                     {"series_max_terms", cfg.series.max_terms},
                     {"inner_abs_tol", cfg.analytic.quad.inner_abs_tol},
                     {"outer_abs_tol", cfg.analytic.quad.outer_abs_tol},
                     {"max_intervals", cfg.analytic.quad.max_intervals},
                     {"laplace_method",
                      cfg.analytic.method == ppp::LaplaceMethod::nested ? "nested" : "reduced"},
                     {"ase_abs_tol", cfg.analytic.ase_abs_tol}};
    t["output"] = {{"dir", cfg.output_dir}, {"gnuplot", cfg.gnuplot}};
    return t;
}

json normalize_config(json const& tree)
{
    return dump_config(parse_config(tree));
}

}  // namespace tddgeom::app
