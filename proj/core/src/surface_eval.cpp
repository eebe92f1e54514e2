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
#include <subdiv_iga/surface_eval.hpp>

#include <cmath>

namespace subdiv_iga {

SurfacePoint evaluate_surface_point(const ElementPatch& patch, const ControlMesh& mesh, const Vec2& xi)
{
    return evaluate_surface_point(patch, mesh, evaluate_basis(patch, xi));
}

SurfacePoint evaluate_surface_point(const ElementPatch& patch, const ControlMesh& mesh, BasisEval basis)
{
    SurfacePoint sp;
    const int n = patch.size();
    Eigen::Matrix<double, 3, Eigen::Dynamic> P(3, n);
    for (int a = 0; a < n; ++a) P.col(a) = mesh.vertex(patch.control_vertices[static_cast<std::size_t>(a)]);
    sp.position = P * basis.values;
    sp.jacobian.col(0) = P * basis.d_xi;
    sp.jacobian.col(1) = P * basis.d_eta;

    const Vec3 cross = sp.jacobian.col(0).cross(sp.jacobian.col(1));
    const double norm = cross.norm();
    const Eigen::Matrix2d G = sp.jacobian.transpose() * sp.jacobian;
    const double det = G.determinant();
    if (!(norm > 0.0) || !(det > 0.0)) throw EvaluationError("degenerate surface parametrization");
    sp.normal = cross / norm;
    sp.area_element = std::sqrt(det);

    Eigen::Matrix<double, 2, Eigen::Dynamic> dN(2, n);
    dN.row(0) = basis.d_xi.transpose();
    dN.row(1) = basis.d_eta.transpose();
    sp.gradients = sp.jacobian * G.inverse() * dN;
    sp.basis = std::move(basis);
    return sp;
}

} // namespace subdiv_iga
