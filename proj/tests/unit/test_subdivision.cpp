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

#include <subdiv_iga/fitting.hpp>
#include <subdiv_iga/generators.hpp>
#include <subdiv_iga/subdivision.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace subdiv_iga {
namespace {

/// Plate grid with random heights; x and y keep the integer grid layout.
ControlMesh bumpy_grid(int n, unsigned seed)
{
    const ControlMesh flat = plate_mesh1(n, static_cast<double>(n));
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    std::vector<Vec3> v = flat.vertices();
    for (Vec3& p : v) p.z() = u(rng);
    return flat.with_vertices(std::move(v));
}

TEST(SubdivideCurve, LengthEndpointsAndStencils)
{
    Eigen::MatrixXd p(4, 2);
    p << 0, 0, 1, 2, 3, 1, 4, 4;
    const Eigen::MatrixXd q = subdivide_curve(p);
    ASSERT_EQ(q.rows(), 7);
    EXPECT_TRUE(q.row(0).isApprox(p.row(0)));
    EXPECT_TRUE(q.row(6).isApprox(p.row(3)));
    EXPECT_TRUE(q.row(1).isApprox(0.5 * (p.row(0) + p.row(1))));
    EXPECT_TRUE(q.row(2).isApprox(0.125 * p.row(0) + 0.75 * p.row(1) + 0.125 * p.row(2)));
    EXPECT_THROW(subdivide_curve(p.topRows(2)), std::invalid_argument);
}

TEST(SubdivideCurve, PreservesTheLimitCurve)
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd p(6, 3);
    for (Eigen::Index i = 0; i < p.size(); ++i) p.data()[i] = u(rng);
    const Eigen::MatrixXd q = subdivide_curve(p);
    for (int k = 0; k <= 100; ++k) {
        const double t = k / 100.0;
        EXPECT_LT((evaluate_open_curve(p, t) - evaluate_open_curve(q, t)).norm(), 1e-13) << "t = " << t;
    }
}

TEST(SubdivideMesh, CountsAndChildOrientation)
{
    const ControlMesh m = hemisphere_mesh();
    const ControlMesh s = subdivide_mesh(m);
    EXPECT_EQ(s.num_vertices(), m.num_vertices() + m.num_edges() + m.num_faces());
    EXPECT_EQ(s.num_faces(), 4 * m.num_faces());
    EXPECT_EQ(s.extraordinary_vertices(), m.extraordinary_vertices());
    for (int f = 0; f < m.num_faces(); ++f)
        for (int c = 0; c < 4; ++c) {
            const Quad& child = s.face(4 * f + c);
            EXPECT_EQ(child[static_cast<std::size_t>(c)], m.face(f)[static_cast<std::size_t>(c)]);
            EXPECT_EQ(child[static_cast<std::size_t>((c + 2) % 4)], m.num_vertices() + m.num_edges() + f);
        }
}

TEST(SubdivideMesh, RegularVertexRuleIsTensorProductCurveRule)
{
    const int n = 6;
    const ControlMesh m = bumpy_grid(n, 5);
    const ControlMesh s = subdivide_mesh(m);
    const std::array<double, 3> w{1.0 / 8.0, 6.0 / 8.0, 1.0 / 8.0};
    auto id = [n](int i, int j) { return i + (n + 1) * j; };
    for (int j = 1; j < n; ++j)
        for (int i = 1; i < n; ++i) {
            Vec3 expected = Vec3::Zero();
            for (int b = -1; b <= 1; ++b)
                for (int a = -1; a <= 1; ++a)
                    expected += w[static_cast<std::size_t>(a + 1)] * w[static_cast<std::size_t>(b + 1)] *
                                m.vertex(id(i + a, j + b));
            EXPECT_LT((s.vertex(id(i, j)) - expected).norm(), 1e-14);
        }
}

TEST(SubdivideMesh, ExtraordinaryVertexRuleMatchesAveragedForm)
{
    const ControlMesh m = testing::perturb(cylinder_7ev_mesh(CylinderGeometry{}), 0.05, 2);
    const ControlMesh s = subdivide_mesh(m);
    for (int v : m.extraordinary_vertices()) {
        const auto faces = m.vertex_faces(v);
        const double k = static_cast<double>(faces.size());
        Vec3 face_avg = Vec3::Zero(), mid_avg = Vec3::Zero();
        for (int f : faces) {
            const Quad& q = m.face(f);
            face_avg += 0.25 * (m.vertex(q[0]) + m.vertex(q[1]) + m.vertex(q[2]) + m.vertex(q[3])) / k;
        }
        for (const Edge& e : m.edges())
            if (e.v0 == v || e.v1 == v) mid_avg += 0.5 * (m.vertex(e.v0) + m.vertex(e.v1)) / k;
        const Vec3 expected = (face_avg + 2.0 * mid_avg + (k - 3.0) * m.vertex(v)) / k;
        EXPECT_LT((s.vertex(v) - expected).norm(), 1e-14) << "valence " << k;
    }
}

TEST(SubdivideMesh, BoundaryFollowsCurveSubdivision)
{
    const int n = 5;
    const ControlMesh m = bumpy_grid(n, 9);
    const ControlMesh s = subdivide_mesh(m);
    Eigen::MatrixXd row(n + 1, 3);
    for (int i = 0; i <= n; ++i) row.row(i) = m.vertex(i).transpose();
    const Eigen::MatrixXd expected = subdivide_curve(row);

    std::vector<Vec3> fine_bottom;
    for (const Vec3& p : s.vertices())
        if (std::abs(p.y()) < 1e-12) fine_bottom.push_back(p);
    std::sort(fine_bottom.begin(), fine_bottom.end(), [](const Vec3& a, const Vec3& b) { return a.x() < b.x(); });
    ASSERT_EQ(static_cast<Eigen::Index>(fine_bottom.size()), expected.rows());
    for (std::size_t i = 0; i < fine_bottom.size(); ++i)
        EXPECT_LT((fine_bottom[i] - expected.row(static_cast<Eigen::Index>(i)).transpose()).norm(), 1e-14);
}

TEST(SubdivideMesh, AffineInvariance)
{
    EXPECT_LT(testing::affine_invariance_error(testing::perturb(hemisphere_mesh(), 0.05, 1), 1), 1e-12);
    EXPECT_LT(testing::affine_invariance_error(testing::perturb(plate_mesh2(), 0.1, 2), 2), 1e-12);
    EXPECT_LT(testing::affine_invariance_error(cylinder_4ev_mesh(CylinderGeometry{}), 3), 1e-12);
}

TEST(SubdivideMesh, PlanarMeshStaysPlanar)
{
    const ControlMesh s = subdivide_mesh(plate_mesh2(), 2);
    for (const Vec3& p : s.vertices()) EXPECT_EQ(p.z(), 0.0);
}

TEST(SubdivideMesh, LevelCounts)
{
    const ControlMesh m = plate_mesh1(2);
    EXPECT_EQ(subdivide_mesh(m, 0).num_faces(), 4);
    EXPECT_EQ(subdivide_mesh(m, 3).num_faces(), 4 * 64);
    EXPECT_THROW(subdivide_mesh(m, -1), std::invalid_argument);
}

} // namespace
} // namespace subdiv_iga
