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
#include <subdiv_iga/basis.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace subdiv_iga {

namespace {

void check_unit(double t, const char* what)
{
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument(std::string(what) + ": parameter " + std::to_string(t) + " outside [0,1]");
}

void check_unit(const Vec2& xi, const char* what)
{
    check_unit(xi.x(), what);
    check_unit(xi.y(), what);
}

template <std::size_t NU, std::size_t NV>
BasisEval tensor(const std::array<double, NU>& u, const std::array<double, NU>& du, const std::array<double, NV>& v,
                 const std::array<double, NV>& dv)
{
    BasisEval out;
    const auto n = static_cast<Eigen::Index>(NU * NV);
    out.values.resize(n);
    out.d_xi.resize(n);
    out.d_eta.resize(n);
    for (std::size_t j = 0; j < NV; ++j)
        for (std::size_t i = 0; i < NU; ++i) {
            const auto idx = static_cast<Eigen::Index>(i + NU * j);
            out.values[idx] = u[i] * v[j];
            out.d_xi[idx] = du[i] * v[j];
            out.d_eta[idx] = u[i] * dv[j];
        }
    return out;
}

} // namespace

CurveBasis curve_basis(double t)
{
    check_unit(t, "curve_basis");
    const double t2 = t * t, t3 = t2 * t;
    CurveBasis b;
    b.values = {(1.0 - 3.0 * t + 3.0 * t2 - t3) / 6.0, (4.0 - 6.0 * t2 + 3.0 * t3) / 6.0,
                (1.0 + 3.0 * t + 3.0 * t2 - 3.0 * t3) / 6.0, t3 / 6.0};
    b.derivs = {(-3.0 + 6.0 * t - 3.0 * t2) / 6.0, (-12.0 * t + 9.0 * t2) / 6.0, (3.0 + 6.0 * t - 9.0 * t2) / 6.0,
                t2 / 2.0};
    return b;
}

BoundaryCurveBasis curve_basis_boundary(double t)
{
    check_unit(t, "curve_basis_boundary");
    const double t2 = t * t, t3 = t2 * t;
    BoundaryCurveBasis b;
    b.values = {(6.0 - 6.0 * t + t3) / 6.0, (6.0 * t - 2.0 * t3) / 6.0, t3 / 6.0};
    b.derivs = {(-6.0 + 3.0 * t2) / 6.0, (6.0 - 6.0 * t2) / 6.0, t2 / 2.0};
    return b;
}

BasisEval regular_basis(const Vec2& xi)
{
    const CurveBasis u = curve_basis(xi.x());
    const CurveBasis v = curve_basis(xi.y());
    return tensor(u.values, u.derivs, v.values, v.derivs);
}

BasisEval surface_basis(const ElementPatch& patch, const Vec2& xi)
{
    check_unit(xi, "surface_basis");
    switch (patch.type) {
    case PatchType::RegularInterior: return regular_basis(xi);
    case PatchType::BoundaryEdge: {
        const CurveBasis u = curve_basis(xi.x());
        const BoundaryCurveBasis v = curve_basis_boundary(xi.y());
        return tensor(u.values, u.derivs, v.values, v.derivs);
    }
    case PatchType::BoundaryCorner: {
        const BoundaryCurveBasis u = curve_basis_boundary(xi.x());
        const BoundaryCurveBasis v = curve_basis_boundary(xi.y());
        return tensor(u.values, u.derivs, v.values, v.derivs);
    }
    case PatchType::Irregular: break;
    }
    throw std::invalid_argument("surface_basis: irregular patch, use eval_irregular");
}

SubdivisionLevel subdivision_level(const Vec2& xi)
{
    check_unit(xi, "subdivision_level");
    double m = std::max(xi.x(), xi.y());
    if (m == 0.0) throw EvaluationError("singular point: basis is not differentiable at the extraordinary vertex");
    Vec2 p = xi;
    const double floor_m = std::ldexp(1.0, -kMaxSubdivisionLevel);
    if (m < floor_m) {
        p *= floor_m / m;
        m = floor_m;
    }
    int e = 0;
    std::frexp(m, &e);
    const int n = std::clamp(1 - e, 1, kMaxSubdivisionLevel);
    const double s = std::ldexp(p.x(), n);
    const double t = std::ldexp(p.y(), n);

    SubdivisionLevel out;
    out.n = n;
    if (s >= 1.0 && t < 1.0) {
        out.k = 1;
        out.local = {s - 1.0, t};
    } else if (s >= 1.0) {
        out.k = 2;
        out.local = {s - 1.0, t - 1.0};
    } else {
        out.k = 3;
        out.local = {s, t - 1.0};
    }
    out.local = out.local.cwiseMax(0.0).cwiseMin(1.0);
    return out;
}

BasisEval eval_irregular(const ElementPatch& patch, const SubdivisionOperators& ops, const Vec2& xi)
{
    if (patch.type != PatchType::Irregular) throw std::invalid_argument("eval_irregular: patch is not irregular");
    if (patch.valence != ops.valence()) throw std::invalid_argument("eval_irregular: operator valence mismatch");
    const SubdivisionLevel lvl = subdivision_level(xi);
    const BasisEval reg = regular_basis(lvl.local);
    const Eigen::MatrixXd& P = ops.picking_matrix(lvl.n, lvl.k);
    const double scale = std::ldexp(1.0, lvl.n);
    BasisEval out;
    out.values = P.transpose() * reg.values;
    out.d_xi = scale * (P.transpose() * reg.d_xi);
    out.d_eta = scale * (P.transpose() * reg.d_eta);
    return out;
}

BasisEval evaluate_basis(const ElementPatch& patch, const Vec2& xi)
{
    if (patch.type == PatchType::Irregular) return eval_irregular(patch, operators_for_valence(patch.valence), xi);
    return surface_basis(patch, xi);
}

Vec3 combine(const ElementPatch& patch, const ControlMesh& mesh, const Eigen::VectorXd& weights)
{
    Vec3 x = Vec3::Zero();
    for (int a = 0; a < patch.size(); ++a)
        x += weights[a] * mesh.vertex(patch.control_vertices[static_cast<std::size_t>(a)]);
    return x;
}

Vec3 limit_position(const ElementPatch& patch, const ControlMesh& mesh, const Vec2& xi)
{
    return combine(patch, mesh, evaluate_basis(patch, xi).values);
}

Mat32 jacobian(const ElementPatch& patch, const ControlMesh& mesh, const Vec2& xi)
{
    const BasisEval b = evaluate_basis(patch, xi);
    Mat32 J;
    J.col(0) = combine(patch, mesh, b.d_xi);
    J.col(1) = combine(patch, mesh, b.d_eta);
    return J;
}

} // namespace subdiv_iga
