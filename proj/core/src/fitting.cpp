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
#include <subdiv_iga/fitting.hpp>

#include <subdiv_iga/basis.hpp>
#include <subdiv_iga/quadrature.hpp>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace subdiv_iga {

Eigen::SparseMatrix<double> build_evaluation_operator(const ControlMesh& mesh, const std::vector<ElementPatch>& patches,
                                                      const std::vector<Sample>& samples)
{
    std::vector<Eigen::Triplet<double>> triplets;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        if (s.element < 0 || s.element >= static_cast<int>(patches.size()))
            throw std::invalid_argument("sample " + std::to_string(i) + " references a missing element");
        const ElementPatch& p = patches[static_cast<std::size_t>(s.element)];
        const BasisEval b = evaluate_basis(p, s.xi);
        for (int a = 0; a < p.size(); ++a)
            if (b.values[a] != 0.0)
                triplets.emplace_back(static_cast<int>(i), p.control_vertices[static_cast<std::size_t>(a)], b.values[a]);
    }
    Eigen::SparseMatrix<double> L(static_cast<Eigen::Index>(samples.size()), mesh.num_vertices());
    L.setFromTriplets(triplets.begin(), triplets.end());
    return L;
}

std::vector<Sample> vertex_samples(const ControlMesh& mesh, const std::vector<ElementPatch>& patches)
{
    static const Vec2 corner_uv[4] = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)};
    std::vector<Sample> out;
    for (int v = 0; v < mesh.num_vertices(); ++v) {
        if (mesh.is_extraordinary(v)) continue;
        const int f = mesh.vertex_faces(v).front();
        const Quad& q = mesh.face(f);
        const int c = static_cast<int>(std::find(q.begin(), q.end(), v) - q.begin());
        const ElementPatch& p = patches[static_cast<std::size_t>(f)];
        out.push_back({f, face_to_patch(p.origin_corner, corner_uv[c])});
    }
    return out;
}

std::vector<Sample> gauss_samples(const std::vector<ElementPatch>& patches, int q)
{
    const QuadratureRule rule = gauss_2d(q);
    std::vector<Sample> out;
    out.reserve(patches.size() * rule.points.size());
    for (std::size_t e = 0; e < patches.size(); ++e)
        for (const auto& qp : rule.points) out.push_back({static_cast<int>(e), qp.xi});
    return out;
}

Eigen::MatrixXd fit_interpolate(const Eigen::SparseMatrix<double>& L, const Eigen::MatrixXd& S)
{
    if (L.rows() != L.cols()) throw std::invalid_argument("fit_interpolate: L must be square");
    if (S.rows() != L.rows()) throw std::invalid_argument("fit_interpolate: sample count mismatch");
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(L);
    if (lu.info() != Eigen::Success) throw SolverError("fit_interpolate: singular evaluation operator");
    Eigen::MatrixXd P = lu.solve(S);
    if (lu.info() != Eigen::Success || !P.allFinite()) throw SolverError("fit_interpolate: solve failed");
    return P;
}

Eigen::MatrixXd fit_least_squares(const Eigen::SparseMatrix<double>& L, const Eigen::MatrixXd& S)
{
    if (S.rows() != L.rows()) throw std::invalid_argument("fit_least_squares: sample count mismatch");
    const Eigen::SparseMatrix<double> N = L.transpose() * L;
    const Eigen::MatrixXd rhs = L.transpose() * S;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(N);
    if (ldlt.info() != Eigen::Success) throw SolverError("fit_least_squares: normal matrix factorization failed");
    if ((ldlt.vectorD().array() <= 1e-14 * ldlt.vectorD().cwiseAbs().maxCoeff()).any())
        throw SolverError("fit_least_squares: rank-deficient normal matrix (too few samples)");
    Eigen::MatrixXd P = ldlt.solve(rhs);
    if (ldlt.info() != Eigen::Success || !P.allFinite()) throw SolverError("fit_least_squares: solve failed");
    return P;
}

ControlMesh fit_surface(const ControlMesh& mesh, const SurfaceProjector& project, const SurfaceFitOptions& options)
{
    const std::vector<ElementPatch> patches = classify_elements(mesh);
    std::vector<Sample> samples = vertex_samples(mesh, patches);
    const std::vector<Sample> interior = gauss_samples(patches, options.samples_per_direction);
    samples.insert(samples.end(), interior.begin(), interior.end());
    const Eigen::SparseMatrix<double> L = build_evaluation_operator(mesh, patches, samples);

    Eigen::MatrixXd P(mesh.num_vertices(), 3);
    for (int v = 0; v < mesh.num_vertices(); ++v) P.row(v) = project(mesh.vertex(v)).transpose();
    for (int pass = 0; pass < options.passes; ++pass) {
        const Eigen::MatrixXd limit = L * P;
        Eigen::MatrixXd S(limit.rows(), 3);
        for (Eigen::Index i = 0; i < limit.rows(); ++i) S.row(i) = project(limit.row(i).transpose()).transpose();
        P = fit_least_squares(L, S);
    }
    std::vector<Vec3> verts(static_cast<std::size_t>(mesh.num_vertices()));
    for (int v = 0; v < mesh.num_vertices(); ++v) verts[static_cast<std::size_t>(v)] = P.row(v).transpose();
    return mesh.with_vertices(std::move(verts));
}

Eigen::VectorXd evaluate_open_curve(const Eigen::MatrixXd& cp, double t)
{
    const Eigen::Index n = cp.rows();
    if (n < 3) throw std::invalid_argument("evaluate_open_curve: need at least 3 control points");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("evaluate_open_curve: t outside [0,1]");
    const Eigen::Index segments = n - 1;
    const double s = t * static_cast<double>(segments);
    const Eigen::Index seg = std::min<Eigen::Index>(static_cast<Eigen::Index>(s), segments - 1);
    const double local = s - static_cast<double>(seg);
    // Mirror ghost points at both ends reproduce the interpolating end bases.
    auto point = [&](Eigen::Index i) -> Eigen::VectorXd {
        if (i < 0) return 2.0 * cp.row(0).transpose() - cp.row(1).transpose();
        if (i >= n) return 2.0 * cp.row(n - 1).transpose() - cp.row(n - 2).transpose();
        return cp.row(i).transpose();
    };
    const CurveBasis b = curve_basis(local);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(cp.cols());
    for (Eigen::Index a = 0; a < 4; ++a) x += b.values[static_cast<std::size_t>(a)] * point(seg - 1 + a);
    return x;
}

Eigen::SparseMatrix<double> open_curve_knot_operator(int n)
{
    if (n < 3) throw std::invalid_argument("open_curve_knot_operator: need at least 3 points");
    std::vector<Eigen::Triplet<double>> t;
    t.emplace_back(0, 0, 1.0);
    for (int i = 1; i + 1 < n; ++i) {
        t.emplace_back(i, i - 1, 1.0 / 6.0);
        t.emplace_back(i, i, 2.0 / 3.0);
        t.emplace_back(i, i + 1, 1.0 / 6.0);
    }
    t.emplace_back(n - 1, n - 1, 1.0);
    Eigen::SparseMatrix<double> L(n, n);
    L.setFromTriplets(t.begin(), t.end());
    return L;
}

CurveFitResult fit_sine_curve(int samples)
{
    using std::numbers::pi;
    Eigen::MatrixXd S(samples, 2);
    for (int i = 0; i < samples; ++i) {
        const double x = static_cast<double>(i) / (samples - 1);
        S(i, 0) = x;
        S(i, 1) = std::sin(4.0 * pi * x);
    }
    CurveFitResult res;
    res.control_points = fit_interpolate(open_curve_knot_operator(samples), S);
    const int scan = 2000;
    for (int i = 0; i <= scan; ++i) {
        const Eigen::VectorXd p = evaluate_open_curve(res.control_points, static_cast<double>(i) / scan);
        res.max_deviation = std::max(res.max_deviation, std::abs(p[1] - std::sin(4.0 * pi * p[0])));
    }
    return res;
}

} // namespace subdiv_iga
