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
#include "properties.hpp"

#include <subdiv_iga/basis.hpp>
#include <subdiv_iga/generators.hpp>
#include <subdiv_iga/surface_eval.hpp>

#include <gtest/gtest.h>

namespace subdiv_iga {
namespace {

TEST(CurveBasis, KnotValuesAndPartitionOfUnity)
{
    const CurveBasis b0 = curve_basis(0.0);
    EXPECT_NEAR(b0.values[0], 1.0 / 6.0, 1e-16);
    EXPECT_NEAR(b0.values[1], 2.0 / 3.0, 1e-16);
    EXPECT_NEAR(b0.values[2], 1.0 / 6.0, 1e-16);
    EXPECT_NEAR(b0.values[3], 0.0, 1e-16);
    EXPECT_NEAR(b0.derivs[0], -0.5, 1e-16);
    EXPECT_NEAR(b0.derivs[2], 0.5, 1e-16);
    for (double t = 0.0; t <= 1.0; t += 0.01) {
        const CurveBasis b = curve_basis(t);
        EXPECT_NEAR(b.values[0] + b.values[1] + b.values[2] + b.values[3], 1.0, 1e-15);
        EXPECT_NEAR(b.derivs[0] + b.derivs[1] + b.derivs[2] + b.derivs[3], 0.0, 1e-15);
    }
    EXPECT_THROW(curve_basis(-0.1), std::invalid_argument);
}

TEST(CurveBasis, BoundaryBasisEqualsMirroredGhostPoint)
{
    // Ghost P_-1 = 2 P_0 - P_1 folds the first regular function into the next two.
    for (double t = 0.0; t <= 1.0; t += 0.05) {
        const CurveBasis r = curve_basis(t);
        const BoundaryCurveBasis b = curve_basis_boundary(t);
        EXPECT_NEAR(b.values[0], r.values[1] + 2.0 * r.values[0], 1e-15);
        EXPECT_NEAR(b.values[1], r.values[2] - r.values[0], 1e-15);
        EXPECT_NEAR(b.values[2], r.values[3], 1e-15);
        EXPECT_NEAR(b.derivs[0], r.derivs[1] + 2.0 * r.derivs[0], 1e-15);
        EXPECT_NEAR(b.derivs[1], r.derivs[2] - r.derivs[0], 1e-15);
        EXPECT_NEAR(b.derivs[2], r.derivs[3], 1e-15);
    }
    const BoundaryCurveBasis at0 = curve_basis_boundary(0.0);
    EXPECT_EQ(at0.values[0], 1.0);
    EXPECT_EQ(at0.values[1], 0.0);
}

class BasisProperties : public ::testing::TestWithParam<std::size_t>
{
};

TEST_P(BasisProperties, PartitionOfUnity)
{
    const testing::BasisKind kind = testing::basis_kinds()[GetParam()];
    const testing::PartitionError e = testing::partition_of_unity_error(kind.patch, 1000, 100 + GetParam());
    EXPECT_LT(e.values, 1e-12) << kind.label;
    EXPECT_LT(e.derivatives, 1e-10) << kind.label;
}

TEST_P(BasisProperties, DerivativesMatchFiniteDifferences)
{
    const testing::BasisKind kind = testing::basis_kinds()[GetParam()];
    EXPECT_LT(testing::finite_difference_error(kind.patch, 300, 200 + GetParam()), 1e-6) << kind.label;
}

INSTANTIATE_TEST_SUITE_P(AllKinds, BasisProperties, ::testing::Range<std::size_t>(0, 7));

TEST(SurfaceBasis, ValuesAreNonNegative)
{
    for (const testing::BasisKind& kind : testing::basis_kinds()) {
        for (const Vec2& xi : testing::random_points(200, 300))
            EXPECT_GE(evaluate_basis(kind.patch, xi).values.minCoeff(), -1e-14) << kind.label;
    }
}

TEST(SurfaceBasis, RejectsMisuse)
{
    EXPECT_THROW(surface_basis(testing::synthetic_patch(PatchType::Irregular, 3), Vec2(0.5, 0.5)),
                 std::invalid_argument);
    EXPECT_THROW(surface_basis(testing::synthetic_patch(PatchType::RegularInterior), Vec2(0.5, 1.2)),
                 std::invalid_argument);
    EXPECT_THROW(eval_irregular(testing::synthetic_patch(PatchType::RegularInterior), operators_for_valence(4),
                                Vec2(0.5, 0.5)),
                 std::invalid_argument);
    EXPECT_THROW(eval_irregular(testing::synthetic_patch(PatchType::Irregular, 3), operators_for_valence(5),
                                Vec2(0.5, 0.5)),
                 std::invalid_argument);
    EXPECT_THROW(evaluate_basis(testing::synthetic_patch(PatchType::Irregular, 3), Vec2(0.0, 0.0)), EvaluationError);
}

TEST(LimitSurface, LinearPrecisionOnUniformGrid)
{
    const ControlMesh m = plate_mesh1(5, 5.0);
    for (const ElementPatch& p : classify_elements(m)) {
        const Quad& q = m.face(p.face);
        const Vec3 origin = m.vertex(q[0]);
        for (const Vec2& uv : testing::random_points(20, static_cast<unsigned>(p.face))) {
            const Vec3 x = limit_position(p, m, face_to_patch(p.origin_corner, uv));
            EXPECT_LT((x - (origin + Vec3(uv.x(), uv.y(), 0.0))).norm(), 1e-13) << "face " << p.face;
        }
    }
}

TEST(LimitSurface, JacobianMatchesFiniteDifferences)
{
    const ControlMesh m = testing::perturb(hemisphere_mesh(), 0.02, 8);
    const double h = 1e-6;
    for (const ElementPatch& p : classify_elements(m))
        for (Vec2 xi : testing::random_points(5, static_cast<unsigned>(p.face), 0.1, 0.9)) {
            const Mat32 J = jacobian(p, m, xi);
            const Vec3 du = (limit_position(p, m, xi + Vec2(h, 0)) - limit_position(p, m, xi - Vec2(h, 0))) / (2 * h);
            const Vec3 dv = (limit_position(p, m, xi + Vec2(0, h)) - limit_position(p, m, xi - Vec2(0, h))) / (2 * h);
            EXPECT_LT((J.col(0) - du).norm(), 1e-7);
            EXPECT_LT((J.col(1) - dv).norm(), 1e-7);
        }
}

TEST(LimitSurface, RegularInterfacesAreC2)
{
    const testing::InterfaceJumps j = testing::regular_interface_jumps(8, 20, 31);
    EXPECT_LT(j.c0, 1e-10);
    EXPECT_LT(j.c1, 1e-10);
    EXPECT_LT(j.c2, 1e-10);
}

TEST(SurfacePoint, GeometryAndGradientsOfLinearFields)
{
    const ControlMesh m = testing::perturb(hemisphere_mesh(), 0.02, 9);
    const Vec3 a(0.3, -1.2, 0.7);
    Eigen::VectorXd u(m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) u[v] = a.dot(m.vertex(v));
    for (const ElementPatch& p : classify_elements(m))
        for (const Vec2& xi : testing::random_points(5, static_cast<unsigned>(p.face), 1e-3, 1.0)) {
            const SurfacePoint sp = evaluate_surface_point(p, m, xi);
            const Vec3 cross = sp.jacobian.col(0).cross(sp.jacobian.col(1));
            EXPECT_NEAR(sp.area_element, cross.norm(), 1e-12);
            EXPECT_LT((sp.normal - cross.normalized()).norm(), 1e-12);
            EXPECT_NEAR(evaluate_solution(p, u, sp.basis), a.dot(sp.position), 1e-12);
            Eigen::VectorXd ue(p.size());
            for (int i = 0; i < p.size(); ++i) ue[i] = u[p.control_vertices[static_cast<std::size_t>(i)]];
            const Vec3 tangential = a - a.dot(sp.normal) * sp.normal;
            EXPECT_LT((sp.gradients * ue - tangential).norm(), 1e-10);
        }
}

TEST(SurfacePoint, DegenerateParametrizationThrows)
{
    const ControlMesh m({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {2, 0, 0}},
                        {{0, 1, 2, 3}, {1, 4, 5, 2}, {3, 2, 6, 7}, {2, 5, 8, 6}});
    const ElementPatch p = classify_element(m, 0);
    EXPECT_THROW(evaluate_surface_point(p, m, Vec2(0.0, 0.0)), EvaluationError);
}

} // namespace
} // namespace subdiv_iga
