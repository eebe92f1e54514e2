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
#pragma once

#include <subdiv_iga/fitting.hpp>
#include <subdiv_iga/generators.hpp>
#include <subdiv_iga/solver.hpp>

#include <optional>
#include <string>
#include <vector>

namespace subdiv_iga::cli {

/// How finer levels are produced from the coarse mesh.
enum class Refinement
{
    /// Subdivide the previous level.
    Subdivide,
    /// Subdivide the previous level, then refit it to the target surface.
    SubdivideAndRefit,
};

struct CaseDefinition
{
    std::string name;
    ControlMesh coarse;
    Problem problem;
    /// Target surface for least-squares fitting; unset for meshes used as given.
    std::optional<SurfaceProjector> target;
    Refinement refinement = Refinement::Subdivide;
    int default_levels = 3;
    int default_adaptive_depth = 0;
};

/// Cylinder used by the built-in cylinder cases: axis x1, x1 in [0, 3], radius 1.25.
CylinderGeometry default_cylinder();

std::vector<std::string> case_names();

/// Throws ConfigError for unknown names.
CaseDefinition make_case(const std::string& name);

/// Meshes for levels 0..levels-1, fitted to the target where the case has one.
/// With a replacement mesh the target is dropped and levels are plain subdivisions.
std::vector<ControlMesh> build_levels(const CaseDefinition& definition, int levels);

} // namespace subdiv_iga::cli
