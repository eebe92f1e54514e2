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

#include <subdiv_iga/basis.hpp>

#include <Eigen/Dense>

namespace subdiv_iga {

/// Geometry and basis data at one parametric point of an element.
struct SurfacePoint
{
    Vec3 position = Vec3::Zero();
    Mat32 jacobian = Mat32::Zero();
    /// Unit normal from the cross product of the Jacobian columns.
    Vec3 normal = Vec3::UnitZ();
    /// sqrt(det(J^T J)).
    double area_element = 0.0;
    BasisEval basis;
    /// Surface gradients of the basis functions, one column per control vertex.
    Eigen::Matrix<double, 3, Eigen::Dynamic> gradients;
};

/// Surface gradient uses the left pseudo-inverse of J. Throws EvaluationError if the
/// parametrization degenerates.
SurfacePoint evaluate_surface_point(const ElementPatch& patch, const ControlMesh& mesh, const Vec2& xi);

/// Same, reusing an already evaluated basis.
SurfacePoint evaluate_surface_point(const ElementPatch& patch, const ControlMesh& mesh, BasisEval basis);

} // namespace subdiv_iga
