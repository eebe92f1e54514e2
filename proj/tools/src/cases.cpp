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
#include <subdiv_iga_cli/cases.hpp>
#include <subdiv_iga_cli/config.hpp>

#include <subdiv_iga/subdivision.hpp>

#include <cmath>

namespace subdiv_iga::cli {

namespace {

constexpr double kPlateSize = 2.0;

CaseDefinition plate_case_definition(const std::string& name, int test, int mesh)
{
    CaseDefinition def;
    def.name = name;
    def.coarse = mesh == 1 ? plate_mesh1(4, kPlateSize) : plate_mesh2(kPlateSize);
    def.problem.exact = plate_case(test);
    def.problem.flat = true;
    def.problem.dirichlet = [](const Vec3& x) {
        const double tol = 1e-8 * kPlateSize;
        return std::abs(x.y()) < tol || std::abs(x.y() - kPlateSize) < tol;
    };
    def.default_levels = 4;
    return def;
}

CaseDefinition curved_case(const std::string& name, ControlMesh coarse, SurfaceProjector target, Refinement refinement,
                           int levels)
{
    CaseDefinition def;
    def.name = name;
    def.coarse = std::move(coarse);
    def.problem.exact = sine_exponential_case();
    def.target = std::move(target);
    def.refinement = refinement;
    def.default_levels = levels;
    return def;
}

} // namespace

CylinderGeometry default_cylinder()
{
    CylinderGeometry g;
    g.radius = 1.25;
    g.length = 3.0;
    g.z0 = 0.0;
    g.axis = 0;
    return g;
}

std::vector<std::string> case_names()
{
    std::vector<std::string> names;
    for (int mesh = 1; mesh <= 2; ++mesh)
        for (int test = 1; test <= 4; ++test)
            names.push_back("plate-test" + std::to_string(test) + "-mesh" + std::to_string(mesh));
    for (const char* n : {"cylinder-regular", "cylinder-4ev", "cylinder-7ev", "hemisphere"}) names.emplace_back(n);
    return names;
}

CaseDefinition make_case(const std::string& name)
{
    for (int mesh = 1; mesh <= 2; ++mesh)
        for (int test = 1; test <= 4; ++test)
            if (name == "plate-test" + std::to_string(test) + "-mesh" + std::to_string(mesh))
                return plate_case_definition(name, test, mesh);

    const CylinderGeometry g = default_cylinder();
    if (name == "cylinder-regular")
        return curved_case(name, cylinder_grid(26, 10, g), cylinder_projector(g), Refinement::SubdivideAndRefit, 4);
    if (name == "cylinder-4ev")
        return curved_case(name, cylinder_4ev_mesh(g), cylinder_projector(g), Refinement::Subdivide, 3);
    if (name == "cylinder-7ev")
        return curved_case(name, cylinder_7ev_mesh(g), cylinder_projector(g), Refinement::Subdivide, 3);
    if (name == "hemisphere")
        return curved_case(name, hemisphere_mesh(1.0), sphere_projector(1.0), Refinement::SubdivideAndRefit, 3);

    std::string known;
    for (const std::string& n : case_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown case '" + name + "' (known: " + known + ")");
}

std::vector<ControlMesh> build_levels(const CaseDefinition& definition, int levels)
{
    if (levels < 1) throw ConfigError("levels must be at least 1");
    std::vector<ControlMesh> meshes;
    meshes.reserve(static_cast<std::size_t>(levels));
    meshes.push_back(definition.target ? fit_surface(definition.coarse, *definition.target) : definition.coarse);
    for (int l = 1; l < levels; ++l) {
        ControlMesh next = subdivide_mesh(meshes.back());
        if (definition.target && definition.refinement == Refinement::SubdivideAndRefit)
            next = fit_surface(next, *definition.target);
        meshes.push_back(std::move(next));
    }
    return meshes;
}

} // namespace subdiv_iga::cli
