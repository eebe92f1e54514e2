/*
 * Copyright 2026 The subdiv-iga Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include <subdiv_iga_cli/driver.hpp>

#include <subdiv_iga/generators.hpp>
#include <subdiv_iga/subdivision.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <numbers>

namespace {

using namespace subdiv_iga;
using namespace subdiv_iga::cli;

struct Overrides
{
    std::string case_arg;
    std::optional<int> levels;
    std::optional<std::string> quadrature;
    std::optional<double> beta;
    std::optional<std::string> mesh;
    std::optional<std::string> out;
    std::optional<int> threads;
    std::optional<int> samples;
    std::optional<int> repeats;
};

void add_run_options(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--case", o.case_arg, "Built-in case name or path to a key=value config file")->required();
    cmd->add_option("--levels", o.levels, "Number of mesh levels")->check(CLI::PositiveNumber);
    cmd->add_option("--quadrature", o.quadrature, "standard or adaptive:N (irregular elements only)");
    cmd->add_option("--beta", o.beta, "Penalty factor")->check(CLI::PositiveNumber);
    cmd->add_option("--mesh", o.mesh, "OBJ control mesh replacing the case's coarse mesh");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--threads", o.threads, "Assembly threads")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", o.samples, "Pointwise samples per element direction")->check(CLI::Range(2, 100));
}

RunConfig resolve_config(const Overrides& o)
{
    RunConfig config;
    if (std::filesystem::is_regular_file(o.case_arg))
        config = load_config(o.case_arg);
    else
        config.case_name = o.case_arg;
    if (o.levels) apply_setting(config, "levels", std::to_string(*o.levels));
    if (o.quadrature) apply_setting(config, "quadrature", *o.quadrature);
    if (o.beta) config.beta = *o.beta;
    if (o.mesh) config.mesh = *o.mesh;
    if (o.out) config.out = *o.out;
    if (o.threads) config.threads = *o.threads;
    if (o.samples) config.samples = *o.samples;
    if (o.repeats) config.repeats = *o.repeats;
    return config;
}

ControlMesh generate_mesh(const std::string& name, int resolution, bool fit)
{
    const CylinderGeometry g = default_cylinder();
    if (name == "plate1") return plate_mesh1(resolution > 0 ? resolution : 4);
    if (name == "plate2") return plate_mesh2();
    if (name == "cylinder") {
        const int n_theta = resolution > 0 ? resolution : 26;
        const double element = 2.0 * std::numbers::pi * g.radius / n_theta;
        const int n_z = std::max(2, static_cast<int>(std::lround(g.length / element)));
        const ControlMesh m = cylinder_grid(n_theta, n_z, g);
        return fit ? fit_surface(m, cylinder_projector(g)) : m;
    }
    if (name == "cylinder-4ev" || name == "cylinder-7ev") {
        const ControlMesh m = name == "cylinder-4ev" ? cylinder_4ev_mesh(g) : cylinder_7ev_mesh(g);
        return fit ? fit_surface(m, cylinder_projector(g)) : m;
    }
    if (name == "hemisphere") {
        const ControlMesh m = hemisphere_mesh(1.0);
        return fit ? fit_surface(m, sphere_projector(1.0)) : m;
    }
    throw ConfigError("unknown generator '" + name + "' (known: plate1, plate2, cylinder, cylinder-4ev, cylinder-7ev, hemisphere)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Isogeometric analysis on Catmull-Clark subdivision surfaces"};
    app.require_subcommand(1);

    Overrides run_opts;
    CLI::App* run = app.add_subcommand("run", "Run a convergence study and write CSV artifacts");
    add_run_options(run, run_opts);

    Overrides timing_opts;
    CLI::App* timing = app.add_subcommand("timing", "Assembly times for adaptive depths 0, 3 and 7");
    add_run_options(timing, timing_opts);
    timing->add_option("--repeats", timing_opts.repeats, "Repetitions per entry")->check(CLI::PositiveNumber);

    std::string gen_name, gen_out;
    int gen_resolution = 0, gen_levels = 0;
    bool gen_fit = false;
    CLI::App* generate = app.add_subcommand("generate", "Write a generated control mesh as OBJ");
    generate->add_option("name", gen_name, "plate1, plate2, cylinder, cylinder-4ev, cylinder-7ev or hemisphere")
        ->required();
    generate->add_option("--resolution", gen_resolution, "Grid size (plate1) or circumferential count (cylinder)");
    generate->add_option("--levels", gen_levels, "Subdivision steps applied after generation")->check(CLI::NonNegativeNumber);
    generate->add_flag("--fit", gen_fit, "Least-squares fit to the analytic surface before subdividing");
    generate->add_option("-o,--out", gen_out, "Output OBJ path")->required();

    CLI::App* list = app.add_subcommand("cases", "List built-in case names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            const RunReport report = run_case(resolve_config(run_opts), &std::cout);
            std::cout << "wrote convergence.csv, pointwise_error.csv, sparsity.csv (" << report.levels.size()
                      << " levels)\n";
        } else if (*timing) {
            report_timing(resolve_config(timing_opts), &std::cout);
            std::cout << "wrote timing.csv\n";
        } else if (*generate) {
            const ControlMesh mesh = subdivide_mesh(generate_mesh(gen_name, gen_resolution, gen_fit), gen_levels);
            save_obj(mesh, gen_out);
            std::cout << "wrote " << gen_out << ": " << mesh.num_vertices() << " vertices, " << mesh.num_faces()
                      << " faces, " << mesh.extraordinary_vertices().size() << " extraordinary vertices\n";
        } else if (*list) {
            for (const std::string& n : case_names()) std::cout << n << "\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
