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
#include <subdiv_iga/solver.hpp>
#include <subdiv_iga/subdivision.hpp>
#include <subdiv_iga_cli/cases.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numbers>

namespace subdiv_iga {
namespace {

constexpr double kPi = std::numbers::pi;

struct Solved
{
    ControlMesh mesh;
    std::vector<ElementPatch> patches;
    LinearSystem system;
    Eigen::VectorXd u;
};

Solved solve_case(const std::string& name, int level, const AssemblyOptions& options = {})
{
    const cli::CaseDefinition def = cli::make_case(name);
    Solved s{cli::build_levels(def, level + 1).back(), {}, {}, {}};
    s.patches = classify_elements(s.mesh);
    s.system = assemble(s.mesh, s.patches, def.problem, options);
    s.u = solve_penalized(s.system).u;
    return s;
}

double e_L2(const std::string& name, int level, const AssemblyOptions& options)
{
    const Solved s = solve_case(name, level, options);
    return error_norms(s.mesh, s.patches, s.u, cli::make_case(name).problem.exact, options.scheme).e_L2;
}

ManufacturedCase constant_case(double value)
{
    return {"constant", [value](const Vec3&) { return value; }, [](const Vec3&) { return Vec3::Zero().eval(); },
            [](const Vec3&) { return Mat3::Zero().eval(); }};
}

// Manufactured solutions

TEST(Manufactured, PlateTestFourForcing)
{
    const ManufacturedCase c = plate_case(4);
    for (double y : {0.1, 0.5, 1.3}) {
        const Vec3 x(0.4, y, 0.0);
        EXPECT_NEAR(manufactured_rhs(c, x, Vec3::UnitZ(), 0.0), kPi * std::sin(kPi * y), 1e-13);
        EXPECT_NEAR(c.u(x), std::sin(kPi * y) / kPi + 2.0 * y, 1e-15);
    }
    EXPECT_THROW(plate_case(5), std::invalid_argument);
}

TEST(Manufactured, LinearOnFlatSurfaceHasNoForcing)
{
    const ManufacturedCase c = plate_case(1);
    EXPECT_NEAR(manufactured_rhs(c, Vec3(0.3, 0.7, 0.0), Vec3::UnitZ(), 0.0), 0.0, 1e-15);
}

TEST(Manufactured, DerivativesMatchFiniteDifferences)
{
    const double h = 1e-4;
    for (const ManufacturedCase& c : {sine_exponential_case(), plate_case(2), plate_case(3), plate_case(4)})
        for (const Vec2& p : testing::random_points(20, 3)) {
            const Vec3 x(p.x(), p.y(), 0.3 * p.x() - 0.2);
            Vec3 g_fd;
            Mat3 h_fd;
            for (int i = 0; i < 3; ++i) {
                const Vec3 e = h * Vec3::Unit(i);
                g_fd[i] = (c.u(x + e) - c.u(x - e)) / (2 * h);
                h_fd.col(i) = (c.grad(x + e) - c.grad(x - e)) / (2 * h);
            }
            EXPECT_LT((g_fd - c.grad(x)).norm(), 1e-7) << c.name;
            EXPECT_LT((h_fd - c.hess(x)).norm(), 1e-6) << c.name;
            EXPECT_LT((c.hess(x) - c.hess(x).transpose()).norm(), 1e-15) << c.name;
        }
}

TEST(Manufactured, SineExponentialLaplacian)
{
    const ManufacturedCase c = sine_exponential_case();
    for (const Vec2& p : testing::random_points(50, 4)) {
        const Vec3 x(p.x(), p.y(), p.x() * p.y());
        EXPECT_NEAR(c.hess(x).trace(), (1.0 - 2.0 * kPi * kPi) * c.u(x), 1e-12);
    }
}

TEST(Manufactured, ForcingAgainstFiniteDifferenceOracle)
{
    const ManufacturedCase c = sine_exponential_case();
    const Vec3 x(0.5, 0.0, 0.0);
    const double h = 1e-4, curvature = 0.7;
    auto u = [&](double dx, double dy, double dz) { return c.u(x + Vec3(dx, dy, dz)); };
    const double uxx = (u(h, 0, 0) - 2 * u(0, 0, 0) + u(-h, 0, 0)) / (h * h);
    const double uyy = (u(0, h, 0) - 2 * u(0, 0, 0) + u(0, -h, 0)) / (h * h);
    const double uzz = (u(0, 0, h) - 2 * u(0, 0, 0) + u(0, 0, -h)) / (h * h);
    const double uz = (u(0, 0, h) - u(0, 0, -h)) / (2 * h);
    const double expected = -(uxx + uyy + uzz) + uzz + curvature * uz;
    EXPECT_NEAR(manufactured_rhs(c, x, Vec3::UnitZ(), curvature), expected, 1e-6);
}

// Assembly

TEST(Assembly, StiffnessSymmetricWithConstantKernel)
{
    Problem curved;
    curved.exact = sine_exponential_case();
    Problem flat;
    flat.exact = plate_case(4);
    flat.flat = true;
    for (const auto& [mesh, problem] : std::vector<std::pair<ControlMesh, Problem>>{
             {plate_mesh1(4), flat},
             {plate_mesh2(), flat},
             {hemisphere_mesh(), curved},
             {cylinder_4ev_mesh(CylinderGeometry{}), curved},
         }) {
        const testing::StiffnessChecks s = testing::stiffness_checks(mesh, problem);
        EXPECT_LT(s.max_row_sum, 1e-10);
        EXPECT_LT(s.relative_asymmetry, 1e-12);
    }
}

TEST(Assembly, InteriorSparsityFootprint)
{
    const ControlMesh m = plate_mesh1(10);
    Problem p;
    p.exact = plate_case(4);
    p.flat = true;
    const LinearSystem sys = assemble(m, classify_elements(m), p, AssemblyOptions{});
    const std::vector<int> nnz = row_nonzeros(sys.K);
    for (int j = 3; j <= 7; ++j)
        for (int i = 3; i <= 7; ++i) EXPECT_EQ(nnz[static_cast<std::size_t>(i + 11 * j)], 49);
}

TEST(Assembly, DeterministicAcrossThreadCounts)
{
    const ControlMesh m = subdivide_mesh(hemisphere_mesh());
    const auto patches = classify_elements(m);
    Problem p;
    p.exact = sine_exponential_case();
    AssemblyOptions one, three;
    three.threads = 3;
    const LinearSystem a = assemble(m, patches, p, one);
    const LinearSystem b = assemble(m, patches, p, three);
    EXPECT_EQ(testing::sparse_inf_norm(a.K - b.K), 0.0);
    EXPECT_EQ((a.f - b.f).lpNorm<Eigen::Infinity>(), 0.0);
    EXPECT_EQ(testing::sparse_inf_norm(a.Mb - b.Mb), 0.0);
}

TEST(Assembly, BoundarySegments)
{
    const ControlMesh plate = plate_mesh1(4);
    const auto segs = boundary_segments(classify_elements(plate));
    EXPECT_EQ(segs.size(), 16u);
    std::map<std::size_t, int> sizes;
    for (const BoundarySegment& s : segs) ++sizes[s.vertices.size()];
    EXPECT_EQ(sizes[3], 8);
    EXPECT_EQ(sizes[4], 8);
    const ControlMesh hemi = hemisphere_mesh();
    EXPECT_EQ(static_cast<int>(boundary_segments(classify_elements(hemi)).size()), hemi.num_boundary_edges());
}

TEST(Assembly, BoundaryMassReproducesBoundaryLength)
{
    // 1^T M_b 1 is the length of the Dirichlet boundary.
    const ControlMesh m = plate_mesh1(4);
    Problem p;
    p.exact = plate_case(1);
    p.flat = true;
    const LinearSystem all = assemble(m, classify_elements(m), p, AssemblyOptions{});
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(m.num_vertices());
    EXPECT_NEAR(one.dot(all.Mb * one), 8.0, 1e-12);
    p.dirichlet = [](const Vec3& x) { return std::abs(x.y()) < 1e-9; };
    const LinearSystem bottom = assemble(m, classify_elements(m), p, AssemblyOptions{});
    EXPECT_NEAR(one.dot(bottom.Mb * one), 2.0, 1e-12);
}

// Normals and curvature

TEST(Normals, FlatPlateProjectsToUnitZ)
{
    const ControlMesh m = plate_mesh2();
    const Eigen::MatrixX3d n = project_normals(m, classify_elements(m), QuadratureScheme{});
    for (Eigen::Index i = 0; i < n.rows(); ++i) EXPECT_LT((n.row(i) - Eigen::RowVector3d(0, 0, 1)).norm(), 1e-10);
}

TEST(Normals, CylinderNormalsAreRadial)
{
    const ControlMesh m = cli::build_levels(cli::make_case("cylinder-regular"), 3).back();
    const auto patches = classify_elements(m);
    const Eigen::MatrixX3d n = project_normals(m, patches, QuadratureScheme{});
    double worst = 0.0;
    for (const ElementPatch& p : patches)
        for (const Vec2& xi : testing::random_points(2, static_cast<unsigned>(p.face))) {
            const SurfacePoint sp = evaluate_surface_point(p, m, xi);
            const Vec3 radial = Vec3(0.0, sp.position.y(), sp.position.z()).normalized();
            const Vec3 nh = projected_normal(p, sp, n);
            worst = std::max(worst, (nh - radial).norm());
            EXPECT_GT(nh.norm(), 0.9);
            EXPECT_LT(nh.norm(), 1.1);
        }
    EXPECT_LT(worst, 1e-2);
}

double interior_curvature_error(int level)
{
    const ControlMesh m = cli::build_levels(cli::make_case("hemisphere"), level + 1).back();
    const auto patches = classify_elements(m);
    const Eigen::MatrixX3d n = project_normals(m, patches, QuadratureScheme{});
    double worst = 0.0;
    for (const ElementPatch& p : patches) {
        if (p.type != PatchType::RegularInterior) continue;
        for (const Vec2& xi : testing::random_points(2, static_cast<unsigned>(p.face))) {
            const SurfacePoint sp = evaluate_surface_point(p, m, xi);
            if (sp.position.z() > 0.3) worst = std::max(worst, std::abs(total_curvature(p, sp, n) - 2.0));
        }
    }
    return worst;
}

TEST(Normals, HemisphereCurvatureConvergesAwayFromRim)
{
    const double coarse = interior_curvature_error(1);
    const double fine = interior_curvature_error(2);
    EXPECT_LT(fine, 0.05);
    EXPECT_LT(fine, 0.5 * coarse);
}

// Solving

TEST(Solve, ConjugateGradientMatchesDirect)
{
    const ControlMesh m = subdivide_mesh(hemisphere_mesh());
    const auto patches = classify_elements(m);
    Problem p;
    p.exact = sine_exponential_case();
    const LinearSystem sys = assemble(m, patches, p, AssemblyOptions{});
    SolveOptions direct;
    direct.method = SolveOptions::Method::Direct;
    const SolveResult a = solve_penalized(sys);
    const SolveResult b = solve_penalized(sys, direct);
    EXPECT_LT(a.relative_residual, 1e-12);
    EXPECT_LT((a.u - b.u).norm() / b.u.norm(), 1e-8);
}

TEST(Solve, RejectsIndefiniteAndCapsIterations)
{
    Eigen::SparseMatrix<double> A(2, 2);
    A.insert(0, 0) = 1.0;
    A.insert(0, 1) = 2.0;
    A.insert(1, 0) = 2.0;
    A.insert(1, 1) = 1.0;
    EXPECT_THROW(conjugate_gradient(A, Eigen::Vector2d(1.0, -1.0)), SolverError);

    const ControlMesh m = plate_mesh1(8);
    Problem p;
    p.exact = plate_case(4);
    p.flat = true;
    const LinearSystem sys = assemble(m, classify_elements(m), p, AssemblyOptions{});
    SolveOptions capped;
    capped.max_iterations_factor = 0;
    EXPECT_THROW(solve_penalized(sys, capped), SolverError);
}

TEST(Solve, ZeroDataGivesZeroSolution)
{
    const ControlMesh m = plate_mesh1(4);
    Problem p;
    p.exact = constant_case(0.0);
    p.flat = true;
    const SolveResult r = solve_penalized(assemble(m, classify_elements(m), p, AssemblyOptions{}));
    EXPECT_EQ(r.u.lpNorm<Eigen::Infinity>(), 0.0);
}

TEST(Solve, PatchTestIsExact)
{
    const Solved s = solve_case("plate-test1-mesh1", 1);
    const auto field = pointwise_error_field(s.mesh, s.patches, s.u, plate_case(1), 4);
    ASSERT_GE(field.size(), 1000u);
    for (const PointwiseError& e : field) EXPECT_LT(e.abs_error, 1e-5);
}

TEST(Solve, BoundaryMismatchShrinksWithPenalty)
{
    double previous = 1e300;
    for (double beta : {1e4, 1e6, 1e8, 1e10, 1e12}) {
        AssemblyOptions o;
        o.beta = beta;
        const Solved s = solve_case("plate-test1-mesh1", 0, o);
        double mismatch = 0.0;
        for (const PointwiseError& e : pointwise_error_field(s.mesh, s.patches, s.u, plate_case(1), 9))
            if (std::abs(e.x.y()) < 1e-12 || std::abs(e.x.y() - 2.0) < 1e-12) mismatch = std::max(mismatch, e.abs_error);
        EXPECT_LT(mismatch, previous) << "beta " << beta;
        previous = mismatch;
    }
}

TEST(Solve, PenaltyConverged)
{
    AssemblyOptions base, scaled;
    scaled.beta = 1e9;
    const double a = e_L2("plate-test4-mesh1", 2, base);
    const double b = e_L2("plate-test4-mesh1", 2, scaled);
    EXPECT_LT(std::abs(a - b) / a, 0.01);
}

TEST(Solve, TwoPointRuleKeepsOptimalRate)
{
    for (int order : {2, 3}) {
        AssemblyOptions o;
        o.scheme = QuadratureScheme(0, order);
        const double rate = std::log2(e_L2("plate-test4-mesh1", 2, o) / e_L2("plate-test4-mesh1", 3, o));
        EXPECT_NEAR(rate, 4.0, 0.5) << "order " << order;
    }
}

TEST(Solve, ReflectionSymmetricSolution)
{
    const Solved s = solve_case("plate-test2-mesh1", 2);
    std::map<std::pair<long, long>, int> index;
    auto key = [](double x, double y) { return std::make_pair(std::lround(x * 1e6), std::lround(y * 1e6)); };
    for (int v = 0; v < s.mesh.num_vertices(); ++v) index[key(s.mesh.vertex(v).x(), s.mesh.vertex(v).y())] = v;
    const double scale = s.u.lpNorm<Eigen::Infinity>();
    for (int v = 0; v < s.mesh.num_vertices(); ++v) {
        const Vec3& x = s.mesh.vertex(v);
        const int mirror = index.at(key(2.0 - x.x(), x.y()));
        EXPECT_LT(std::abs(s.u[v] - s.u[mirror]), 1e-10 * scale);
    }
}

// Error measures

TEST(ErrorNorms, ExactConstantGivesZeroError)
{
    const ControlMesh m = hemisphere_mesh();
    const auto patches = classify_elements(m);
    const ErrorNorms e =
        error_norms(m, patches, Eigen::VectorXd::Constant(m.num_vertices(), 3.0), constant_case(3.0), QuadratureScheme(7));
    EXPECT_LT(e.e_L2, 1e-14);
    EXPECT_LT(e.error_H1, 1e-12);
    EXPECT_GT(e.norm_L2, 0.0);
    EXPECT_THROW(error_norms(m, patches, Eigen::VectorXd::Zero(m.num_vertices()), constant_case(0.0), QuadratureScheme{}),
                 std::invalid_argument);
}

TEST(ErrorNorms, L2NormOfConstantIsAreaRoot)
{
    const ControlMesh m = plate_mesh2();
    const ErrorNorms e = error_norms(m, classify_elements(m), Eigen::VectorXd::Zero(m.num_vertices()),
                                     constant_case(1.0), QuadratureScheme(7));
    EXPECT_NEAR(e.norm_L2, 2.0, 1e-3);
    EXPECT_NEAR(e.e_L2, 1.0, 1e-14);
}

TEST(PointwiseField, GridSkipsExtraordinaryCorner)
{
    const ControlMesh m = hemisphere_mesh();
    const auto patches = classify_elements(m);
    Eigen::VectorXd u(m.num_vertices());
    for (int v = 0; v < m.num_vertices(); ++v) u[v] = m.vertex(v).x();
    ManufacturedCase linear{"x1", [](const Vec3& x) { return x.x(); }, [](const Vec3&) { return Vec3::UnitX().eval(); },
                            [](const Vec3&) { return Mat3::Zero().eval(); }};
    const auto field = pointwise_error_field(m, patches, u, linear, 5);
    EXPECT_EQ(static_cast<int>(field.size()), m.num_faces() * 25 - 12);
    int near = 0;
    for (const PointwiseError& e : field) {
        EXPECT_LT(e.abs_error, 1e-12);
        near += e.near_extraordinary;
    }
    EXPECT_EQ(near, 12 * 25 - 12);
}

} // namespace
} // namespace subdiv_iga
