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

#include <subdiv_iga/patch.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <functional>
#include <vector>

namespace subdiv_iga {

/// A parametric sample inside one element.
struct Sample
{
    int element = -1;
    Vec2 xi = Vec2::Zero();
};

/// Row i holds the basis values of sample i scattered to global control-vertex columns.
Eigen::SparseMatrix<double> build_evaluation_operator(const ControlMesh& mesh, const std::vector<ElementPatch>& patches,
                                                      const std::vector<Sample>& samples);

/// One sample per control vertex at its element corner. Extraordinary vertices are skipped,
/// since the basis is not evaluable there.
std::vector<Sample> vertex_samples(const ControlMesh& mesh, const std::vector<ElementPatch>& patches);

/// q x q Gauss abscissae inside every element.
std::vector<Sample> gauss_samples(const std::vector<ElementPatch>& patches, int q);

/// Solves L P = S for square L; throws SolverError if L is singular.
Eigen::MatrixXd fit_interpolate(const Eigen::SparseMatrix<double>& L, const Eigen::MatrixXd& S);

/// Solves the normal equations L^T L P = L^T S; throws SolverError if L^T L is singular.
Eigen::MatrixXd fit_least_squares(const Eigen::SparseMatrix<double>& L, const Eigen::MatrixXd& S);

/// Maps a point to the closest point of the target surface.
using SurfaceProjector = std::function<Vec3(const Vec3&)>;

struct SurfaceFitOptions
{
    /// Interior Gauss samples per direction and element.
    int samples_per_direction = 3;
    /// Each pass projects the current limit samples onto the target and refits.
    int passes = 3;
};

/// Least-squares fit of the mesh's limit surface to the target, keeping the topology.
ControlMesh fit_surface(const ControlMesh& mesh, const SurfaceProjector& project, const SurfaceFitOptions& options = {});

/// Open cubic curve with interpolated end points, one control point per row.
/// Evaluated at t in [0,1], with the n-1 segments spread uniformly.
Eigen::VectorXd evaluate_open_curve(const Eigen::MatrixXd& control_points, double t);

/// Evaluation matrix for samples at the curve's knots (square, n x n).
Eigen::SparseMatrix<double> open_curve_knot_operator(int n);

struct CurveFitResult
{
    Eigen::MatrixXd control_points;
    /// max |y(t) - sin(4 pi x(t))| over a dense parameter scan.
    double max_deviation = 0.0;
};

/// Interpolates `samples` equally spaced points of y = sin(4 pi x) on [0,1].
CurveFitResult fit_sine_curve(int samples);

} // namespace subdiv_iga
