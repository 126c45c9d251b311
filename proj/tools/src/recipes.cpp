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

#include "tddgeom_app/recipes.hpp"

#include <cstdio>
#include <functional>
#include <map>

#include "tddgeom/errors.hpp"

namespace tddgeom::app {
namespace {

std::string tag(char const* key, double value)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "_%s%g", key, value);
    return buf;
}

ExperimentConfig macro_base(std::string const& name, Experiment e, Direction d)
{
    ExperimentConfig c = parse_config(nlohmann::json::object());
    c.name = name;
    c.geometry = Geometry::macro;
    c.experiment = e;
    c.direction = d;
    c.prop.k = 0.0;
    return c;
}

ExperimentConfig ppp_base(std::string const& name, Experiment e, Direction d)
{
    ExperimentConfig c = parse_config(nlohmann::json{{"geometry", "ppp"}});
    c.name = name;
    c.experiment = e;
    c.direction = d;
    c.prop.k = 0.4;
    return c;
}

void set_environment(ExperimentConfig& c, Environment env)
{
    c.environment = env;
    c.prop.a_db = env == Environment::indoor ? 160.0 : 130.0;
}

Recipe isr_recipe(std::string const& name, Direction d)
{
    Recipe r{name, "", {}};
    r.description = d == Direction::dl
                        ? "Macro DL ISR components vs r/delta; 2b in {2.4, 3.5}, alpha_d in {1, 0.75, 0.5}"
                        : "Macro UL ISR components vs r/delta; 2b in {2.4, 3.5}, alpha_u in {1, 0.75, 0.5}";
    for (double two_b : {2.4, 3.5})
        for (double alpha : {1.0, 0.75, 0.5})
        {
            double const alpha_d = d == Direction::dl ? alpha : 1.0 - alpha;
            auto c = macro_base(name + tag("2b", two_b) + tag(d == Direction::dl ? "ad" : "au", alpha),
                                Experiment::isr, d);
            c.prop.two_b = two_b;
            c.mix.alpha_d = alpha_d;
            c.mode = Mode::analytic;
            r.runs.push_back(c);
        }
    return r;
}

Recipe macro_coverage_recipe(std::string const& name, Direction d)
{
    Recipe r{name, "", {}};
    r.description = d == Direction::dl
                        ? "Macro DL coverage, analytic and MC (20000 draws, 4 rings); 2b in {2.5, 3.5}, alpha_d in {1, 0.75, 0.5}, k = 0"
                        : "Macro UL coverage, analytic and MC (20000 draws, 4 rings); 2b in {2.5, 3.5}, alpha_u in {1, 0.75, 0.5}, k = 0";
    for (double two_b : {2.5, 3.5})
        for (double alpha : {1.0, 0.75, 0.5})
        {
            double const alpha_d = d == Direction::dl ? alpha : 1.0 - alpha;
            auto c = macro_base(name + tag("2b", two_b) + tag(d == Direction::dl ? "ad" : "au", alpha),
                                Experiment::coverage, d);
            c.prop.two_b = two_b;
            c.mix.alpha_d = alpha_d;
            c.mode = Mode::both;
            c.n_draws = 20000;
            r.runs.push_back(c);
        }
    return r;
}

Recipe fpc_recipe(std::string const& name)
{
    Recipe r{name, "Macro DL and UL coverage vs FPC factor k in {0, 0.4, 0.8, 1}; alpha_d = 0.5, 2b = 3.5", {}};
    for (Direction d : {Direction::dl, Direction::ul})
        for (double k : {0.0, 0.4, 0.8, 1.0})
        {
            auto c = macro_base(name + (d == Direction::dl ? "_dl" : "_ul") + tag("k", k),
                                Experiment::coverage, d);
            c.prop.k = k;
            c.mix.alpha_d = 0.5;
            c.mode = Mode::both;
            c.n_draws = 20000;
            r.runs.push_back(c);
        }
    return r;
}

Recipe ppp_coverage_recipe(std::string const& name, Direction d)
{
    Recipe r{name, "", {}};
    r.description = d == Direction::dl
                        ? "Small-cell DL coverage, analytic and MC; alpha_d in {1, 0.5}, outdoor/indoor, lambda = 10, k = 0.4"
                        : "Small-cell UL coverage, analytic and MC; alpha_u in {1, 0.5}, outdoor/indoor, lambda = 10, k = 0.4";
    for (Environment env : {Environment::outdoor, Environment::indoor})
        for (double alpha : {1.0, 0.5})
        {
            double const alpha_d = d == Direction::dl ? alpha : 1.0 - alpha;
            auto c = ppp_base(name + "_" + to_string(env) + tag(d == Direction::dl ? "ad" : "au", alpha),
                              Experiment::coverage, d);
            set_environment(c, env);
            c.mix.alpha_d = alpha_d;
            c.mode = Mode::both;
            c.n_draws = 20000;
            r.runs.push_back(c);
        }
    return r;
}

Recipe ase_recipe(std::string const& name, Direction d)
{
    Recipe r{name, "", {}};
    r.description = d == Direction::dl
                        ? "Small-cell DL ASE vs density; alpha_d in {1, 0.5}, outdoor/indoor, k = 0.4 (analytic)"
                        : "Small-cell UL ASE vs density; alpha_u in {1, 0.5}, outdoor/indoor, k = 0.4 (analytic)";
    for (Environment env : {Environment::outdoor, Environment::indoor})
        for (double alpha : {1.0, 0.5})
        {
            double const alpha_d = d == Direction::dl ? alpha : 1.0 - alpha;
            auto c = ppp_base(name + "_" + to_string(env) + tag(d == Direction::dl ? "ad" : "au", alpha),
                              Experiment::ase, d);
            set_environment(c, env);
            c.mix.alpha_d = alpha_d;
            c.mode = Mode::analytic;
            r.runs.push_back(c);
        }
    return r;
}

using Factory = std::function<Recipe()>;

std::map<std::string, Factory> const& registry()
{
    static std::map<std::string, Factory> const reg{
        {"fig1-isr-dl", [] { return isr_recipe("fig1-isr-dl", Direction::dl); }},
        {"fig2-isr-ul", [] { return isr_recipe("fig2-isr-ul", Direction::ul); }},
        {"fig4-cov-dl-macro", [] { return macro_coverage_recipe("fig4-cov-dl-macro", Direction::dl); }},
        {"fig5-cov-ul-macro", [] { return macro_coverage_recipe("fig5-cov-ul-macro", Direction::ul); }},
        {"fig6-fpc", [] { return fpc_recipe("fig6-fpc"); }},
        {"fig7-cov-dl-ppp", [] { return ppp_coverage_recipe("fig7-cov-dl-ppp", Direction::dl); }},
        {"fig8-cov-ul-ppp", [] { return ppp_coverage_recipe("fig8-cov-ul-ppp", Direction::ul); }},
        {"fig9-ase-dl", [] { return ase_recipe("fig9-ase-dl", Direction::dl); }},
        {"fig10-ase-ul", [] { return ase_recipe("fig10-ase-ul", Direction::ul); }},
    };
    return reg;
}

}  // namespace

std::vector<std::string> recipe_names()
{
    return {"fig1-isr-dl",     "fig2-isr-ul",     "fig4-cov-dl-macro",
            "fig5-cov-ul-macro", "fig6-fpc",        "fig7-cov-dl-ppp",
            "fig8-cov-ul-ppp", "fig9-ase-dl",     "fig10-ase-ul"};
}

Recipe make_recipe(std::string const& name)
{
    auto const& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw ConfigError({"recipe: unknown name '" + name + "'"});
    return it->second();
}

}  // namespace tddgeom::app
