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
#include <subdiv_iga/solver.hpp>

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace subdiv_iga {

namespace {

struct ElementBlock
{
    Eigen::MatrixXd ke;
    Eigen::VectorXd fe;
};

std::string element_context(int e, const std::exception& ex)
{
    return "element " + std::to_string(e) + ": " + ex.what();
}

/// Sums element blocks into global sparse storage in element order.
Eigen::SparseMatrix<double> merge_matrix(int n, const std::vector<ElementPatch>& patches,
                                         const std::vector<ElementBlock>& blocks)
{
    std::vector<Eigen::Triplet<double>> triplets;
    std::size_t count = 0;
    for (const auto& p : patches) count += static_cast<std::size_t>(p.size() * p.size());
    triplets.reserve(count);
    for (std::size_t e = 0; e < patches.size(); ++e) {
        const auto& cv = patches[e].control_vertices;
        const auto& ke = blocks[e].ke;
        for (int a = 0; a < ke.rows(); ++a)
            for (int b = 0; b < ke.cols(); ++b)
                triplets.emplace_back(cv[static_cast<std::size_t>(a)], cv[static_cast<std::size_t>(b)], ke(a, b));
    }
    Eigen::SparseMatrix<double> M(n, n);
    M.setFromTriplets(triplets.begin(), triplets.end());
    return M;
}

Eigen::VectorXd merge_vector(int n, const std::vector<ElementPatch>& patches, const std::vector<ElementBlock>& blocks)
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (std::size_t e = 0; e < patches.size(); ++e) {
        const auto& cv = patches[e].control_vertices;
        for (int a = 0; a < blocks[e].fe.size(); ++a) v[cv[static_cast<std::size_t>(a)]] += blocks[e].fe[a];
    }
    return v;
}

} // namespace

void parallel_for(int n, int threads, const std::function<void(int)>& fn)
{
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const int begin = static_cast<int>(static_cast<long long>(n) * t / threads);
        const int end = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
        pool.emplace_back([&, begin, end] {
            try {
                for (int i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

QuadratureScheme::QuadratureScheme(int adaptive_depth, int order)
    : m_depth(adaptive_depth)
    , m_standard(gauss_2d(order))
{
    if (adaptive_depth < 0) throw std::invalid_argument("adaptive depth must be >= 0");
    if (adaptive_depth > 0) m_adaptive = adaptive_rule(adaptive_depth, order);
}

const QuadratureRule& QuadratureScheme::rule_for(const ElementPatch& patch) const
{
    return (patch.type == PatchType::Irregular && m_depth > 0) ? m_adaptive : m_standard;
}

std::string QuadratureScheme::describe() const
{
    return m_depth > 0 ? "adaptive:" + std::to_string(m_depth) : std::string("standard");
}

std::vector<BoundarySegment> boundary_segments(const std::vector<ElementPatch>& patches)
{
    std::vector<BoundarySegment> segs;
    for (std::size_t e = 0; e < patches.size(); ++e) {
        const ElementPatch& p = patches[e];
        const auto& cv = p.control_vertices;
        if (p.type == PatchType::BoundaryEdge) {
            segs.push_back({static_cast<int>(e), BoundarySegment::Side::Bottom, {cv[0], cv[1], cv[2], cv[3]}});
        } else if (p.type == PatchType::BoundaryCorner) {
            segs.push_back({static_cast<int>(e), BoundarySegment::Side::Bottom, {cv[0], cv[1], cv[2]}});
            segs.push_back({static_cast<int>(e), BoundarySegment::Side::Left, {cv[0], cv[3], cv[6]}});
        }
    }
    return segs;
}

void boundary_segment_basis(const ElementPatch& patch, const BoundarySegment& seg, double t, Eigen::VectorXd& values,
                            Eigen::VectorXd& derivs)
{
    if (patch.type == PatchType::BoundaryEdge) {
        const CurveBasis b = curve_basis(t);
        values = Eigen::Map<const Eigen::Vector4d>(b.values.data());
        derivs = Eigen::Map<const Eigen::Vector4d>(b.derivs.data());
    } else if (patch.type == PatchType::BoundaryCorner) {
        const BoundaryCurveBasis b = curve_basis_boundary(t);
        values = Eigen::Map<const Eigen::Vector3d>(b.values.data());
        derivs = Eigen::Map<const Eigen::Vector3d>(b.derivs.data());
    } else {
        throw std::invalid_argument("boundary segment on a patch without boundary edges");
    }
    (void)seg;
}

Vec3 projected_normal(const ElementPatch& patch, const SurfacePoint& sp, const Eigen::MatrixX3d& normals)
{
    Vec3 n = Vec3::Zero();
    for (int a = 0; a < patch.size(); ++a)
        n += sp.basis.values[a] * normals.row(patch.control_vertices[static_cast<std::size_t>(a)]).transpose();
    return n;
}

double total_curvature(const ElementPatch& patch, const SurfacePoint& sp, const Eigen::MatrixX3d& normals)
{
    double c = 0.0;
    for (int a = 0; a < patch.size(); ++a)
        c += sp.gradients.col(a).dot(normals.row(patch.control_vertices[static_cast<std::size_t>(a)]).transpose());
    return c;
}

Eigen::MatrixX3d project_normals(const ControlMesh& mesh, const std::vector<ElementPatch>& patches,
                                 const QuadratureScheme& scheme, int threads)
{
    const int ne = static_cast<int>(patches.size());
    std::vector<ElementBlock> blocks(static_cast<std::size_t>(ne));
    std::vector<Eigen::MatrixX3d> rhs(static_cast<std::size_t>(ne));
    parallel_for(ne, threads, [&](int e) {
        const ElementPatch& p = patches[static_cast<std::size_t>(e)];
        const int n = p.size();
        auto& blk = blocks[static_cast<std::size_t>(e)];
        auto& b = rhs[static_cast<std::size_t>(e)];
        blk.ke = Eigen::MatrixXd::Zero(n, n);
        b = Eigen::MatrixX3d::Zero(n, 3);
        try {
            for (const auto& qp : scheme.rule_for(p).points) {
                const SurfacePoint sp = evaluate_surface_point(p, mesh, qp.xi);
                const double w = qp.weight * sp.area_element;
                blk.ke.noalias() += w * sp.basis.values * sp.basis.values.transpose();
                b.noalias() += w * sp.basis.values * sp.normal.transpose();
            }
        } catch (const Error& ex) {
            throw EvaluationError(element_context(e, ex));
        }
    });
    const Eigen::SparseMatrix<double> M = merge_matrix(mesh.num_vertices(), patches, blocks);
    Eigen::MatrixX3d B = Eigen::MatrixX3d::Zero(mesh.num_vertices(), 3);
    for (int e = 0; e < ne; ++e) {
        const auto& cv = patches[static_cast<std::size_t>(e)].control_vertices;
        for (int a = 0; a < static_cast<int>(cv.size()); ++a)
            B.row(cv[static_cast<std::size_t>(a)]) += rhs[static_cast<std::size_t>(e)].row(a);
    }
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(M);
    if (ldlt.info() != Eigen::Success) throw SolverError("normal projection: singular mass matrix");
    Eigen::MatrixX3d N = ldlt.solve(B);
    if (ldlt.info() != Eigen::Success || !N.allFinite()) throw SolverError("normal projection: solve failed");
    return N;
}

LinearSystem assemble(const ControlMesh& mesh, const std::vector<ElementPatch>& patches, const Problem& problem,
                      const AssemblyOptions& options, const Eigen::MatrixX3d* normals)
{
    const int nc = mesh.num_vertices();
    const int ne = static_cast<int>(patches.size());
    Eigen::MatrixX3d own_normals;
    if (!problem.flat && !normals) {
        own_normals = project_normals(mesh, patches, options.scheme, options.threads);
        normals = &own_normals;
    }

    std::vector<ElementBlock> blocks(static_cast<std::size_t>(ne));
    parallel_for(ne, options.threads, [&](int e) {
        const ElementPatch& p = patches[static_cast<std::size_t>(e)];
        const int n = p.size();
        auto& blk = blocks[static_cast<std::size_t>(e)];
        blk.ke = Eigen::MatrixXd::Zero(n, n);
        blk.fe = Eigen::VectorXd::Zero(n);
        try {
            for (const auto& qp : options.scheme.rule_for(p).points) {
                const SurfacePoint sp = evaluate_surface_point(p, mesh, qp.xi);
                const double w = qp.weight * sp.area_element;
                const double c = problem.flat ? 0.0 : total_curvature(p, sp, *normals);
                const double f = manufactured_rhs(problem.exact, sp.position, sp.normal, c);
                blk.ke.noalias() += w * sp.gradients.transpose() * sp.gradients;
                blk.fe.noalias() += (w * f) * sp.basis.values;
            }
        } catch (const Error& ex) {
            throw EvaluationError(element_context(e, ex));
        }
    });

    LinearSystem sys;
    sys.beta = options.beta;
    sys.K = merge_matrix(nc, patches, blocks);
    sys.f = merge_vector(nc, patches, blocks);

    // Boundary mass matrix over the Dirichlet part of the boundary curve.
    std::vector<double> gx, gw;
    gauss_legendre_01(options.boundary_points, gx, gw);
    std::vector<Eigen::Triplet<double>> triplets;
    sys.fb = Eigen::VectorXd::Zero(nc);
    Eigen::VectorXd vals, ders;
    for (const BoundarySegment& seg : boundary_segments(patches)) {
        const ElementPatch& p = patches[static_cast<std::size_t>(seg.element)];
        auto point = [&](double t, Vec3& x, Vec3& tangent) {
            boundary_segment_basis(p, seg, t, vals, ders);
            x.setZero();
            tangent.setZero();
            for (std::size_t a = 0; a < seg.vertices.size(); ++a) {
                x += vals[static_cast<Eigen::Index>(a)] * mesh.vertex(seg.vertices[a]);
                tangent += ders[static_cast<Eigen::Index>(a)] * mesh.vertex(seg.vertices[a]);
            }
        };
        Vec3 x, tangent;
        if (problem.dirichlet) {
            point(0.5, x, tangent);
            if (!problem.dirichlet(x)) continue;
        }
        const auto m = static_cast<Eigen::Index>(seg.vertices.size());
        Eigen::MatrixXd me = Eigen::MatrixXd::Zero(m, m);
        Eigen::VectorXd fe = Eigen::VectorXd::Zero(m);
        for (std::size_t i = 0; i < gx.size(); ++i) {
            point(gx[i], x, tangent);
            const double w = gw[i] * tangent.norm();
            me.noalias() += w * vals * vals.transpose();
            fe.noalias() += (w * problem.exact.u(x)) * vals;
        }
        for (Eigen::Index a = 0; a < m; ++a) {
            sys.fb[seg.vertices[static_cast<std::size_t>(a)]] += fe[a];
            for (Eigen::Index b = 0; b < m; ++b)
                triplets.emplace_back(seg.vertices[static_cast<std::size_t>(a)], seg.vertices[static_cast<std::size_t>(b)],
                                      me(a, b));
        }
    }
    sys.Mb.resize(nc, nc);
    sys.Mb.setFromTriplets(triplets.begin(), triplets.end());
    return sys;
}

SolveResult conjugate_gradient(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b, const SolveOptions& options)
{
    const Eigen::Index n = b.size();
    if (A.rows() != n || A.cols() != n) throw std::invalid_argument("conjugate_gradient: dimension mismatch");
    Eigen::VectorXd inv_diag(n);
    const Eigen::VectorXd diag = A.diagonal();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(diag[i] > 0.0)) throw SolverError("conjugate_gradient: non-positive diagonal entry at row " + std::to_string(i));
        inv_diag[i] = 1.0 / diag[i];
    }

    SolveResult res;
    res.u = Eigen::VectorXd::Zero(n);
    const double bnorm2 = b.dot(inv_diag.cwiseProduct(b));
    if (bnorm2 == 0.0) return res;

    Eigen::VectorXd r = b;
    Eigen::VectorXd z = inv_diag.cwiseProduct(r);
    Eigen::VectorXd p = z;
    Eigen::VectorXd Ap(n);
    double rz = r.dot(z);
    const long long cap = static_cast<long long>(options.max_iterations_factor) * n;
    const double tol2 = options.tolerance * options.tolerance;
    for (long long it = 1; it <= cap; ++it) {
        Ap.noalias() = A * p;
        const double pAp = p.dot(Ap);
        if (!(pAp > 0.0)) throw SolverError("conjugate_gradient: matrix is not positive definite");
        const double alpha = rz / pAp;
        res.u.noalias() += alpha * p;
        r.noalias() -= alpha * Ap;
        z = inv_diag.cwiseProduct(r);
        const double rz_new = r.dot(z);
        res.iterations = static_cast<int>(it);
        res.relative_residual = std::sqrt(std::max(rz_new, 0.0) / bnorm2);
        if (rz_new <= tol2 * bnorm2) return res;
        p = z + (rz_new / rz) * p;
        rz = rz_new;
    }
    throw SolverError("conjugate_gradient: no convergence after " + std::to_string(cap) +
                      " iterations (relative residual " + std::to_string(res.relative_residual) + ")");
}

SolveResult solve_penalized(const LinearSystem& system, const SolveOptions& options)
{
    const Eigen::SparseMatrix<double> A = system.penalized_matrix();
    const Eigen::VectorXd b = system.penalized_rhs();
    if (options.method == SolveOptions::Method::ConjugateGradient) return conjugate_gradient(A, b, options);

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
    if (ldlt.info() != Eigen::Success) throw SolverError("direct solve: factorization failed");
    SolveResult res;
    res.u = ldlt.solve(b);
    if (ldlt.info() != Eigen::Success || !res.u.allFinite()) throw SolverError("direct solve failed");
    res.relative_residual = (A * res.u - b).norm() / std::max(b.norm(), 1e-300);
    return res;
}

double evaluate_solution(const ElementPatch& patch, const Eigen::VectorXd& u, const BasisEval& basis)
{
    double v = 0.0;
    for (int a = 0; a < patch.size(); ++a) v += basis.values[a] * u[patch.control_vertices[static_cast<std::size_t>(a)]];
    return v;
}

ErrorNorms error_norms(const ControlMesh& mesh, const std::vector<ElementPatch>& patches, const Eigen::VectorXd& u,
                       const ManufacturedCase& exact, const QuadratureScheme& scheme, int threads)
{
    if (u.size() != mesh.num_vertices()) throw std::invalid_argument("error_norms: coefficient vector size mismatch");
    const int ne = static_cast<int>(patches.size());
    // Per element: error L2^2, error grad^2, exact L2^2, exact grad^2.
    std::vector<std::array<double, 4>> parts(static_cast<std::size_t>(ne));
    parallel_for(ne, threads, [&](int e) {
        const ElementPatch& p = patches[static_cast<std::size_t>(e)];
        std::array<double, 4> acc{};
        for (const auto& qp : scheme.rule_for(p).points) {
            const SurfacePoint sp = evaluate_surface_point(p, mesh, qp.xi);
            const double w = qp.weight * sp.area_element;
            const double ue = exact.u(sp.position);
            const Vec3 ge = exact.grad(sp.position);
            const Vec3 gs = ge - sp.normal * sp.normal.dot(ge);
            const double uh = evaluate_solution(p, u, sp.basis);
            Vec3 gh = Vec3::Zero();
            for (int a = 0; a < p.size(); ++a) gh += u[p.control_vertices[static_cast<std::size_t>(a)]] * sp.gradients.col(a);
            acc[0] += w * (ue - uh) * (ue - uh);
            acc[1] += w * (gs - gh).squaredNorm();
            acc[2] += w * ue * ue;
            acc[3] += w * gs.squaredNorm();
        }
        parts[static_cast<std::size_t>(e)] = acc;
    });
    std::array<double, 4> total{};
    for (const auto& a : parts)
        for (std::size_t i = 0; i < 4; ++i) total[i] += a[i];
    if (!(total[2] > 0.0)) throw std::invalid_argument("error_norms: exact solution has zero L2 norm");
    ErrorNorms out;
    out.error_L2 = std::sqrt(total[0]);
    out.error_H1 = std::sqrt(total[0] + total[1]);
    out.norm_L2 = std::sqrt(total[2]);
    out.norm_H1 = std::sqrt(total[2] + total[3]);
    out.e_L2 = out.error_L2 / out.norm_L2;
    out.e_H1 = out.error_H1 / out.norm_H1;
    return out;
}

std::vector<PointwiseError> pointwise_error_field(const ControlMesh& mesh, const std::vector<ElementPatch>& patches,
                                                  const Eigen::VectorXd& u, const ManufacturedCase& exact,
                                                  int samples_per_element)
{
    if (samples_per_element < 2) throw std::invalid_argument("pointwise_error_field: need at least 2 samples per direction");
    std::vector<PointwiseError> out;
    const int s = samples_per_element;
    for (std::size_t e = 0; e < patches.size(); ++e) {
        const ElementPatch& p = patches[e];
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < s; ++i) {
                if (p.type == PatchType::Irregular && i == 0 && j == 0) continue;
                const Vec2 xi(static_cast<double>(i) / (s - 1), static_cast<double>(j) / (s - 1));
                const BasisEval b = evaluate_basis(p, xi);
                PointwiseError pe;
                pe.x = combine(p, mesh, b.values);
                pe.abs_error = std::abs(exact.u(pe.x) - evaluate_solution(p, u, b));
                pe.element = static_cast<int>(e);
                pe.near_extraordinary = p.type == PatchType::Irregular;
                out.push_back(pe);
            }
    }
    return out;
}

std::vector<int> row_nonzeros(const Eigen::SparseMatrix<double>& A)
{
    Eigen::SparseMatrix<double, Eigen::RowMajor> R = A;
    std::vector<int> nnz(static_cast<std::size_t>(R.rows()));
    for (Eigen::Index i = 0; i < R.rows(); ++i)
        nnz[static_cast<std::size_t>(i)] = static_cast<int>(R.outerIndexPtr()[i + 1] - R.outerIndexPtr()[i]);
    return nnz;
}

} // namespace subdiv_iga
