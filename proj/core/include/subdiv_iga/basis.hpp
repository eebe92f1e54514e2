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

#include <subdiv_iga/mesh.hpp>
#include <subdiv_iga/patch.hpp>
#include <subdiv_iga/stam_operators.hpp>

#include <Eigen/Dense>

#include <array>

namespace subdiv_iga {

/// Uniform cubic B-spline segment: 4 values and first derivatives.
struct CurveBasis
{
    std::array<double, 4> values{};
    std::array<double, 4> derivs{};
};

/// End segment interpolating its first control point: 3 values and derivatives.
struct BoundaryCurveBasis
{
    std::array<double, 3> values{};
    std::array<double, 3> derivs{};
};

CurveBasis curve_basis(double xi);
BoundaryCurveBasis curve_basis_boundary(double xi);

/// Basis values and parametric derivatives, ordered like the patch's control vertices.
struct BasisEval
{
    Eigen::VectorXd values;
    Eigen::VectorXd d_xi;
    Eigen::VectorXd d_eta;

    int size() const { return static_cast<int>(values.size()); }
};

/// Tensor-product bases for RegularInterior, BoundaryEdge and BoundaryCorner patches.
BasisEval surface_basis(const ElementPatch& patch, const Vec2& xi);

/// 16 tensor-product values on the regular 4x4 grid (index i + 4j).
BasisEval regular_basis(const Vec2& xi);

struct SubdivisionLevel
{
    int n = 1;
    int k = 1;
    /// Parameters inside the selected sub-element, in [0,1]^2.
    Vec2 local = Vec2::Zero();
};

/// Sub-element containing xi, with half-open dyadic cells closed at xi = 1.
/// Points closer than 2^-kMaxSubdivisionLevel to the origin are clamped radially.
/// Throws EvaluationError at (0,0).
SubdivisionLevel subdivision_level(const Vec2& xi);

/// Irregular patch bases via the operators of its valence.
BasisEval eval_irregular(const ElementPatch& patch, const SubdivisionOperators& ops, const Vec2& xi);

/// Dispatches on the patch type.
BasisEval evaluate_basis(const ElementPatch& patch, const Vec2& xi);

Vec3 limit_position(const ElementPatch& patch, const ControlMesh& mesh, const Vec2& xi);
Mat32 jacobian(const ElementPatch& patch, const ControlMesh& mesh, const Vec2& xi);

/// Combines basis values with the patch control points.
Vec3 combine(const ElementPatch& patch, const ControlMesh& mesh, const Eigen::VectorXd& weights);

} // namespace subdiv_iga
