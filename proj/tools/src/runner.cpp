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

#include "tddgeom_app/runner.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tddgeom/errors.hpp"
#include "tddgeom/hexgrid.hpp"
#include "tddgeom/macro_analytic.hpp"
#include "tddgeom/ppp_analytic.hpp"
#include "tddgeom/ppp_model.hpp"

#ifndef TDDGEOM_GIT_DESCRIBE
#define TDDGEOM_GIT_DESCRIBE "unknown"
#endif

namespace tddgeom::app {
namespace {

constexpr double kZ95 = 1.96;

Table coverage_table(std::vector<double> const& grid,
                     std::optional<CoverageCurve> const& analytic,
                     std::optional<CoverageCurve> const& mc)
{
    Table t;
    if (analytic && mc)
    {
        t.header = {"gamma_db", "analytic", "mc", "mc_ci_halfwidth"};
        for (std::size_t i = 0; i < grid.size(); ++i)
            t.rows.push_back({grid[i], analytic->value[i], mc->value[i], mc->ci_halfwidth[i]});
        return t;
    }
    auto const& c = analytic ? *analytic : *mc;
    t.header = {"gamma_db", "value", "ci_halfwidth"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({grid[i], c.value[i], c.ci_halfwidth[i]});
    return t;
}

bool wants_analytic(Mode m)
{
    return m != Mode::mc;
}

bool wants_mc(Mode m)
{
    return m != Mode::analytic;
}

Table macro_coverage(ExperimentConfig const& cfg)
{
    std::optional<CoverageCurve> analytic, mc;
    if (wants_analytic(cfg.mode))
    {
        macro::MacroModel const model(cfg.network, cfg.prop, cfg.mix, cfg.macro_options());
        analytic = model.coverage_curve(cfg.gamma_grid_db, cfg.direction, cfg.inverse);
    }
    if (wants_mc(cfg.mode))
    {
        hexgrid::MacroMcOptions opts;
        opts.workers = cfg.workers;
        opts.interferers = cfg.interferers;
        mc = hexgrid::mc_coverage_macro(cfg.network, cfg.prop, cfg.mix, cfg.direction,
                                        cfg.gamma_grid_db, cfg.n_draws, cfg.seed, opts);
    }
    return coverage_table(cfg.gamma_grid_db, analytic, mc);
}

ppp::PppMcOptions ppp_mc_options(ExperimentConfig const& cfg)
{
    ppp::PppMcOptions opts;
    opts.workers = cfg.workers;
    opts.far_field_correction = cfg.far_field_correction;
    return opts;
}

Table ppp_coverage(ExperimentConfig const& cfg)
{
    std::optional<CoverageCurve> analytic, mc;
    SmallCellScenario const scn = cfg.scenario();
    if (wants_analytic(cfg.mode))
        analytic = ppp::coverage_curve_ppp(cfg.gamma_grid_db, cfg.direction, scn, cfg.analytic);
    if (wants_mc(cfg.mode))
        mc = ppp::mc_coverage_ppp(scn, cfg.direction, cfg.gamma_grid_db, cfg.n_draws, cfg.seed,
                                  ppp_mc_options(cfg));
    return coverage_table(cfg.gamma_grid_db, analytic, mc);
}

Table macro_isr(ExperimentConfig const& cfg)
{
    Table t;
    bool const analytic = wants_analytic(cfg.mode);
    bool const mc = wants_mc(cfg.mode);
    t.header = {"x"};
    if (analytic)
        t.header.insert(t.header.end(),
                        {"dl_to_dl", "ul_to_dl", "ul_to_ul", "dl_to_ul", "total_dl", "total_ul"});
    if (mc)
    {
        if (analytic)
            t.header.insert(t.header.end(), {"mc_dl_to_dl", "mc_ul_to_dl", "mc_ul_to_dl_ci_halfwidth"});
        else
            t.header.insert(t.header.end(), {"dl_to_dl", "ul_to_dl", "ul_to_dl_ci_halfwidth"});
    }
    std::optional<macro::MacroModel> model;
    if (analytic)
        model.emplace(cfg.network, cfg.prop, cfg.mix, cfg.macro_options());
    hexgrid::UlDlOptions ul_opts;
    ul_opts.workers = cfg.workers;
    for (double x : cfg.x_grid)
    {
        std::vector<double> row{x};
        if (analytic)
        {
            auto const b = model->breakdown(x);
            row.insert(row.end(), {b.dl_to_dl, b.ul_to_dl, b.ul_to_ul, b.dl_to_ul, b.total_dl, b.total_ul});
        }
        if (mc)
        {
            double const r = x * cfg.network.delta;
            double const dl = hexgrid::bruteforce_isr_dl_theta_average(r, cfg.network, cfg.prop);
            auto const ul = hexgrid::bruteforce_isr_ul_dl(MobilePolar{r, 0.0}, cfg.network, cfg.prop,
                                                          cfg.n_draws, cfg.seed, ul_opts);
            row.insert(row.end(), {dl, ul.value, kZ95 * ul.std_error});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table ppp_ase(ExperimentConfig const& cfg)
{
    Table t;
    bool const analytic = wants_analytic(cfg.mode);
    bool const mc = wants_mc(cfg.mode);
    if (analytic && mc)
        t.header = {"lambda", "analytic", "mc", "mc_ci_halfwidth"};
    else
        t.header = {"lambda", "ase", "ci_halfwidth"};
    for (double lambda : cfg.lambda_grid)
    {
        SmallCellScenario const scn = cfg.scenario(lambda);
        std::vector<double> row{lambda};
        if (analytic)
            row.push_back(ppp::ase(scn, cfg.direction, cfg.analytic));
        if (mc)
        {
            auto const est = ppp::mc_ase_ppp(scn, cfg.direction, cfg.n_draws, cfg.seed, ppp_mc_options(cfg));
            row.insert(row.end(), {est.value, kZ95 * est.std_error});
        }
        else
        {
            row.push_back(0.0);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string gnuplot_script(ExperimentConfig const& cfg, Table const& t, std::string const& csv_name)
{
    std::ostringstream gp;
    gp << "set datafile separator ','\n";
    gp << "set key autotitle columnhead\n";
    gp << "set grid\n";
    switch (cfg.experiment)
    {
    case Experiment::coverage:
        gp << "set xlabel 'SINR threshold (dB)'\nset ylabel 'coverage probability'\nset yrange [0:1]\n";
        break;
    case Experiment::isr:
        gp << "set xlabel 'r / delta'\nset ylabel 'ISR'\nset logscale y\n";
        break;
    case Experiment::ase:
        gp << "set xlabel 'density (cells/km^2)'\nset ylabel 'ASE (bits/s/Hz)'\n";
        break;
    }
    gp << "set title '" << cfg.name << "' noenhanced\n";
    gp << "plot ";
    bool first = true;
    for (std::size_t c = 1; c < t.header.size(); ++c)
    {
        if (t.header[c].find("ci_halfwidth") != std::string::npos)
            continue;
        if (!first)
            gp << ", \\\n     ";
        gp << "'" << csv_name << "' using 1:" << (c + 1) << " with linespoints";
        first = false;
    }
    gp << "\n";
    return gp.str();
}

void write_text(std::filesystem::path const& path, std::string const& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out << text;
    if (!out)
        throw Error("write failed for " + path.string());
}

}  // namespace

std::size_t Table::column(std::string const& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw std::out_of_range("no column '" + name + "'");
}

std::vector<double> Table::values(std::string const& name) const
{
    std::size_t const c = column(name);
    std::vector<double> v;
    v.reserve(rows.size());
    for (auto const& row : rows)
        v.push_back(row.at(c));
    return v;
}

Table compute(ExperimentConfig const& cfg)
{
    switch (cfg.experiment)
    {
    case Experiment::coverage:
        return cfg.geometry == Geometry::macro ? macro_coverage(cfg) : ppp_coverage(cfg);
    case Experiment::isr:
        if (cfg.geometry != Geometry::macro)
            throw ConfigError({"experiment: isr sweeps need geometry 'macro'"});
        return macro_isr(cfg);
    case Experiment::ase:
        if (cfg.geometry != Geometry::ppp)
            throw ConfigError({"experiment: ase sweeps need geometry 'ppp'"});
        return ppp_ase(cfg);
    }
    throw ConfigError({"experiment: unsupported"});
}

std::string format_csv(Table const& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
    {
        if (i)
            out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(std::string const& text)
{
    Table t;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (t.header.empty())
        {
            t.header = cells;
            continue;
        }
        if (cells.size() != t.header.size())
            throw ConfigError({"csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(t.header.size()) + " fields"});
        std::vector<double> row;
        for (auto const& c : cells)
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(c, &used);
            }
            catch (std::exception const&)
            {
                used = 0;
            }
            if (used != c.size() || c.empty())
                throw ConfigError({"csv line " + std::to_string(line_no) + ": '" + c + "' is not a number"});
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty())
        throw ConfigError({"csv: missing header"});
    return t;
}

Table read_csv(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError({path.string() + ": cannot open file"});
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

ExperimentConfig apply_overrides(ExperimentConfig cfg, RunOptions const& opts)
{
    if (opts.seed)
        cfg.seed = *opts.seed;
    if (opts.n_draws)
    {
        if (*opts.n_draws == 0)
            throw ConfigError({"n_draws: must be at least 1"});
        cfg.n_draws = *opts.n_draws;
    }
    if (opts.workers)
        cfg.workers = *opts.workers;
    if (opts.gnuplot)
        cfg.gnuplot = *opts.gnuplot;
    return cfg;
}

std::filesystem::path output_directory(ExperimentConfig const& cfg, RunOptions const& opts)
{
    if (opts.out_dir)
        return *opts.out_dir;
    if (!cfg.output_dir.empty())
        return cfg.output_dir;
    if (char const* env = std::getenv("TDDGEOM_OUT_DIR"); env && *env)
        return env;
    return ".";
}

std::string version_string()
{
    return TDDGEOM_GIT_DESCRIBE;
}

RunResult run(ExperimentConfig const& base, RunOptions const& opts)
{
    ExperimentConfig const cfg = apply_overrides(base, opts);
    auto const start = std::chrono::steady_clock::now();
    RunResult result;
    result.table = compute(cfg);
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    auto const dir = output_directory(cfg, opts);
    std::filesystem::create_directories(dir);
    result.csv = dir / (cfg.name + ".csv");
    result.meta = dir / (cfg.name + ".meta.json");
    write_text(result.csv, format_csv(result.table));
    if (cfg.gnuplot)
    {
        result.gnuplot = dir / (cfg.name + ".gp");
        write_text(*result.gnuplot, gnuplot_script(cfg, result.table, result.csv.filename().string()));
    }

    nlohmann::json meta;
    meta["config"] = dump_config(cfg);
    meta["seed"] = cfg.seed;
    meta["version"] = version_string();
    meta["wall_time_s"] = result.wall_seconds;
    meta["csv"] = result.csv.filename().string();
    meta["columns"] = result.table.header;
    write_text(result.meta, meta.dump(2) + "\n");
    return result;
}

}  // namespace tddgeom::app
