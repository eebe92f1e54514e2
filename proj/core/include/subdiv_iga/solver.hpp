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

#include <subdiv_iga/manufactured.hpp>
#include <subdiv_iga/patch.hpp>
#include <subdiv_iga/quadrature.hpp>
#include <subdiv_iga/surface_eval.hpp>

#include <Eigen/Sparse>

#include <functional>
#include <vector>

namespace subdiv_iga {

/// Quadrature per element: q x q Gauss everywhere, optionally the adaptive rule on irregular elements.
class QuadratureScheme
{
public:
    /// adaptive_depth = 0 selects the standard rule for irregular elements too.
    explicit QuadratureScheme(int adaptive_depth = 0, int order = 2);

    const QuadratureRule& rule_for(const ElementPatch& patch) const;
    int adaptive_depth() const { return m_depth; }
    int order() const { return m_standard.order; }
    std::string describe() const;

private:
    int m_depth;
    QuadratureRule m_standard;
    QuadratureRule m_adaptive;
};

/// One boundary curve element: a side of a boundary patch lying on the mesh boundary.
struct BoundarySegment
{
    enum class Side
    {
        Bottom, ///< eta = 0, parametrized by xi
        Left,   ///< xi = 0, parametrized by eta
    };

    int element = -1;
    Side side = Side::Bottom;
    /// Global control vertices of the 1D basis (4 regular, 3 at a corner).
    std::vector<int> vertices;
};

std::vector<BoundarySegment> boundary_segments(const std::vector<ElementPatch>& patches);

/// 1D boundary basis values/derivatives at parameter t, ordered like segment.vertices.
void boundary_segment_basis(const ElementPatch& patch, const BoundarySegment& seg, double t, Eigen::VectorXd& values,
                            Eigen::VectorXd& derivs);

struct Problem
{
    ManufacturedCase exact;
    /// Selects Dirichlet segments by the limit position of their midpoint; empty means the whole boundary.
    std::function<bool(const Vec3&)> dirichlet;
    /// Forces the curvature term to zero and skips the normal projection.
    bool flat = false;
};

struct AssemblyOptions
{
    QuadratureScheme scheme{};
    double beta = 1e8;
    int threads = 1;
    /// Gauss points on boundary curve elements.
    int boundary_points = 2;
};

struct LinearSystem
{
    Eigen::SparseMatrix<double> K;
    Eigen::VectorXd f;
    Eigen::SparseMatrix<double> Mb;
    Eigen::VectorXd fb;
    double beta = 1e8;

    Eigen::SparseMatrix<double> penalized_matrix() const { return K + beta * Mb; }
    Eigen::VectorXd penalized_rhs() const { return f + beta * fb; }
};

/// Nodal normal coefficients (n_c x 3) from the L2 projection of the unit normal.
Eigen::MatrixX3d project_normals(const ControlMesh& mesh, const std::vector<ElementPatch>& patches,
                                 const QuadratureScheme& scheme, int threads = 1);

/// Projected normal field and its surface divergence at a surface point.
Vec3 projected_normal(const ElementPatch& patch, const SurfacePoint& sp, const Eigen::MatrixX3d& normals);
double total_curvature(const ElementPatch& patch, const SurfacePoint& sp, const Eigen::MatrixX3d& normals);

/// Builds K, f, M_b and f_b. For curved problems `normals` is computed when not supplied.
LinearSystem assemble(const ControlMesh& mesh, const std::vector<ElementPatch>& patches, const Problem& problem,
                      const AssemblyOptions& options, const Eigen::MatrixX3d* normals = nullptr);

struct SolveOptions
{
    enum class Method
    {
        ConjugateGradient,
        Direct,
    };

    Method method = Method::ConjugateGradient;
    double tolerance = 1e-12;
    /// Iteration cap is max_iterations_factor * n.
    int max_iterations_factor = 50;
};

struct SolveResult
{
    Eigen::VectorXd u;
    int iterations = 0;
    double relative_residual = 0.0;
};

/// Jacobi-preconditioned conjugate gradients. The residual is measured in the
/// preconditioned norm, sqrt(r^T D^-1 r) / sqrt(b^T D^-1 b).
SolveResult conjugate_gradient(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                               const SolveOptions& options = {});

/// Solves [K + beta M_b] u = f + beta f_b.
SolveResult solve_penalized(const LinearSystem& system, const SolveOptions& options = {});

/// u_h at a parametric point of an element.
double evaluate_solution(const ElementPatch& patch, const Eigen::VectorXd& u, const BasisEval& basis);

struct ErrorNorms
{
    double e_L2 = 0.0; ///< |u - u_h|_L2 / |u|_L2
    double e_H1 = 0.0; ///< |u - u_h|_H1 / |u|_H1
    double error_L2 = 0.0;
    double error_H1 = 0.0;
    double norm_L2 = 0.0;
    double norm_H1 = 0.0;
};

/// Integrated with the given scheme; gradients are surface gradients. Throws if |u|_L2 = 0.
ErrorNorms error_norms(const ControlMesh& mesh, const std::vector<ElementPatch>& patches, const Eigen::VectorXd& u,
                       const ManufacturedCase& exact, const QuadratureScheme& scheme, int threads = 1);

struct PointwiseError
{
    Vec3 x = Vec3::Zero();
    double abs_error = 0.0;
    int element = -1;
    /// Element has an extraordinary vertex at one of its corners.
    bool near_extraordinary = false;
};

/// Uniform s x s parametric grid per element (corners included), skipping the extraordinary vertex.
std::vector<PointwiseError> pointwise_error_field(const ControlMesh& mesh, const std::vector<ElementPatch>& patches,
                                                  const Eigen::VectorXd& u, const ManufacturedCase& exact,
                                                  int samples_per_element);

/// Stored entries per row.
std::vector<int> row_nonzeros(const Eigen::SparseMatrix<double>& A);

/// Runs fn(i) for i in [0, n) on `threads` threads using contiguous chunks.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

} // namespace subdiv_iga
