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
#include <subdiv_iga_cli/csv.hpp>
#include <subdiv_iga_cli/driver.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace subdiv_iga::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_rate(const std::optional<double>& rate)
{
    if (!rate) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *rate);
    return buf;
}

CsvCell optional_cell(const std::optional<double>& v)
{
    return v ? CsvCell(*v) : CsvCell();
}

void write_outputs(const RunConfig& config, const RunReport& report)
{
    std::filesystem::create_directories(config.out);

    CsvWriter conv(config.out / "convergence.csv",
                   {"level", "n_elements", "n_dofs", "h_normalized", "e_L2", "e_H1", "observed_rate_L2",
                    "observed_rate_H1", "assembly_seconds", "solve_seconds"});
    for (const LevelResult& r : report.levels)
        conv.row({static_cast<long long>(r.level), static_cast<long long>(r.n_elements),
                  static_cast<long long>(r.n_dofs), r.h_normalized, r.errors.e_L2, r.errors.e_H1,
                  optional_cell(r.rate_L2), optional_cell(r.rate_H1), r.assembly_seconds, r.solve_seconds});

    CsvWriter pw(config.out / "pointwise_error.csv", {"x1", "x2", "x3", "abs_error"});
    for (const PointwiseError& p : report.pointwise) pw.row({p.x.x(), p.x.y(), p.x.z(), p.abs_error});

    CsvWriter sp(config.out / "sparsity.csv", {"row", "nnz"});
    for (std::size_t i = 0; i < report.row_nnz.size(); ++i)
        sp.row({static_cast<long long>(i), static_cast<long long>(report.row_nnz[i])});
}

int count_irregular(const std::vector<ElementPatch>& patches)
{
    return static_cast<int>(std::count_if(patches.begin(), patches.end(),
                                          [](const ElementPatch& p) { return p.type == PatchType::Irregular; }));
}

} // namespace

double observed_rate(double coarse, double fine)
{
    return std::log2(coarse / fine);
}

CaseDefinition resolve_case(const RunConfig& config)
{
    if (config.case_name.empty()) throw ConfigError("no case given");
    CaseDefinition def = make_case(config.case_name);
    if (config.mesh) {
        if (!std::filesystem::exists(*config.mesh)) throw ConfigError("mesh file not found: " + config.mesh->string());
        def.coarse = load_obj(*config.mesh);
        def.target.reset();
    }
    return def;
}

RunReport run_case(const RunConfig& config, std::ostream* log)
{
    const CaseDefinition def = resolve_case(config);
    const int levels = config.levels > 0 ? config.levels : def.default_levels;
    const int depth = config.adaptive_depth.value_or(def.default_adaptive_depth);
    const std::vector<ControlMesh> meshes = build_levels(def, levels);

    RunReport report;
    report.case_name = def.name;
    report.quadrature = format_quadrature(depth);

    AssemblyOptions options{QuadratureScheme(depth)};
    options.beta = config.beta;
    options.threads = config.threads;

    if (log)
        *log << "case " << def.name << ", quadrature " << report.quadrature << ", beta " << config.beta << "\n"
             << "level  elements     dofs        e_L2        e_H1  rate_L2  rate_H1   iters\n";

    for (int l = 0; l < levels; ++l) {
        const ControlMesh& mesh = meshes[static_cast<std::size_t>(l)];
        const std::vector<ElementPatch> patches = classify_elements(mesh);

        LevelResult r;
        r.level = l;
        r.n_elements = mesh.num_faces();
        r.n_dofs = mesh.num_vertices();
        r.h_normalized = std::ldexp(1.0, -l);

        auto t0 = Clock::now();
        const LinearSystem system = assemble(mesh, patches, def.problem, options);
        r.assembly_seconds = seconds_since(t0);

        t0 = Clock::now();
        const SolveResult solution = solve_penalized(system);
        r.solve_seconds = seconds_since(t0);
        r.iterations = solution.iterations;

        r.errors = error_norms(mesh, patches, solution.u, def.problem.exact, options.scheme, options.threads);
        if (!report.levels.empty()) {
            const LevelResult& prev = report.levels.back();
            r.rate_L2 = observed_rate(prev.errors.e_L2, r.errors.e_L2);
            r.rate_H1 = observed_rate(prev.errors.e_H1, r.errors.e_H1);
        }

        if (log) {
            char line[160];
            std::snprintf(line, sizeof line, "%5d %9d %8d %11.4e %11.4e %8s %8s %7d\n", l, r.n_elements, r.n_dofs,
                          r.errors.e_L2, r.errors.e_H1,
                          format_rate(r.rate_L2).c_str(), format_rate(r.rate_H1).c_str(), r.iterations);
            *log << line << std::flush;
        }

        if (l == levels - 1) {
            report.pointwise = pointwise_error_field(mesh, patches, solution.u, def.problem.exact, config.samples);
            report.row_nnz = row_nonzeros(system.K);
        }
        report.levels.push_back(r);
    }

    write_outputs(config, report);
    return report;
}

std::vector<TimingEntry> report_timing(const RunConfig& config, std::ostream* log)
{
    const CaseDefinition def = resolve_case(config);
    const int levels = config.levels > 0 ? config.levels : def.default_levels;
    const std::vector<ControlMesh> meshes = build_levels(def, levels);

    std::vector<TimingEntry> entries;
    if (log) *log << "case " << def.name << "\nlevel  elements  irregular  n_d  assembly_s  overhead\n";
    for (int l = 0; l < levels; ++l) {
        const ControlMesh& mesh = meshes[static_cast<std::size_t>(l)];
        const std::vector<ElementPatch> patches = classify_elements(mesh);
        double standard = 0.0;
        for (int depth : {0, 3, 7}) {
            AssemblyOptions options{QuadratureScheme(depth)};
            options.beta = config.beta;
            options.threads = config.threads;
            double best = 0.0;
            for (int rep = 0; rep < config.repeats; ++rep) {
                const auto t0 = Clock::now();
                const LinearSystem system = assemble(mesh, patches, def.problem, options);
                const double t = seconds_since(t0);
                best = rep == 0 ? t : std::min(best, t);
            }
            if (depth == 0) standard = best;

            TimingEntry e;
            e.level = l;
            e.n_elements = mesh.num_faces();
            e.n_irregular = count_irregular(patches);
            e.adaptive_depth = depth;
            e.assembly_seconds = best;
            e.overhead = best / standard;
            entries.push_back(e);
            if (log) {
                char line[120];
                std::snprintf(line, sizeof line, "%5d %9d %10d %4d %11.4e %9.4f\n", l, e.n_elements, e.n_irregular,
                              depth, best, e.overhead);
                *log << line << std::flush;
            }
        }
    }

    std::filesystem::create_directories(config.out);
    CsvWriter out(config.out / "timing.csv",
                  {"level", "n_elements", "n_irregular_elements", "n_d", "assembly_seconds", "overhead_ratio"});
    for (const TimingEntry& e : entries)
        out.row({static_cast<long long>(e.level), static_cast<long long>(e.n_elements),
                 static_cast<long long>(e.n_irregular), static_cast<long long>(e.adaptive_depth), e.assembly_seconds,
                 e.overhead});
    return entries;
}

} // namespace subdiv_iga::cli
